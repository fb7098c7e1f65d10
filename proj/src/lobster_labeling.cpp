#include "antimagic/lobster_labeling.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace antimagic {

std::vector<std::pair<Vertex, Vertex>> orient_pendants(const SpineDecomposition& decomp) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex x : decomp.limbs) {
        arcs.emplace_back(x, decomp.limb_anchor.at(x));
        auto it = decomp.tip_children.find(x);
        if (it != decomp.tip_children.end()) {
            for (Vertex y : it->second) arcs.emplace_back(x, y);
        }
    }
    return arcs;
}

MatchingPlan build_matchings(const Tree& t, const SpineDecomposition& decomp) {
    MatchingPlan plan;
    std::vector<char> is_leaf_limb(t.vertex_count(), 0);
    for (Vertex x : decomp.leaf_limbs) is_leaf_limb[x] = 1;

    for (int pos : decomp.branch_positions) {
        Vertex u = decomp.spine[pos];
        Vertex pick = -1;
        for (Vertex v : t.neighbors(u)) {  // ascending, so first off-spine hit is smallest
            if (decomp.limb_anchor.count(v) && decomp.limb_anchor.at(v) == u) {
                pick = v;
                break;
            }
        }
        if (pick < 0) {
            throw std::logic_error("branch vertex without limb neighbor");
        }
        plan.spine_matching.emplace_back(pick, u);
        if (is_leaf_limb[pick]) ++plan.matched_leaf_limb_count;
    }

    for (const auto& [x, tips] : decomp.tip_children) {
        plan.tip_matching.emplace_back(x, tips.front());
    }
    return plan;
}

LabelAllocation allocate_labels(const SpineDecomposition& decomp, const MatchingPlan& plan) {
    const int p = decomp.spine_edge_count();
    const int tip_count = static_cast<int>(decomp.tips.size());
    const int limb_count = static_cast<int>(decomp.limbs.size());
    const int leaf_limb_count = static_cast<int>(decomp.leaf_limbs.size());
    const int r = plan.matched_leaf_limb_count;
    const int branch_count = plan.branch_count();
    const int m = p + limb_count + tip_count;

    LabelAllocation alloc;
    int next = 1;
    auto reserve = [&next](int size) {
        LabelInterval iv{next, next + size - 1};
        next += size;
        return iv;
    };
    alloc.spine = reserve(p);
    alloc.tip_matching = reserve(plan.stem_count());
    alloc.unmatched_tips = reserve(tip_count - plan.stem_count());
    alloc.unmatched_leaf_limbs = reserve(leaf_limb_count - r);
    alloc.spine_matching = reserve(branch_count);
    alloc.unmatched_stems = reserve(limb_count - leaf_limb_count - (branch_count - r));

    if (next != m + 1) {
        throw std::logic_error("label intervals cover [1, " + std::to_string(next - 1) +
                               "] but the tree has " + std::to_string(m) + " edges");
    }
    return alloc;
}

OrientedLabeling assign_matching_labels(OrientedLabeling partial, const SpineDecomposition& decomp,
                                        const MatchingPlan& plan, const LabelAllocation& alloc) {
    std::map<std::pair<Vertex, Vertex>, size_t> arc_index;
    for (size_t i = 0; i < partial.arcs.size(); ++i) {
        arc_index[{partial.arcs[i].tail, partial.arcs[i].head}] = i;
    }
    auto set_label = [&](Vertex tail, Vertex head, int label) {
        auto it = arc_index.find({tail, head});
        if (it == arc_index.end() || partial.arcs[it->second].label != 0) {
            throw std::logic_error("matching arc missing or already labeled");
        }
        partial.arcs[it->second].label = label;
    };

    std::vector<int> sums(partial.vertex_count, 0);
    for (const Arc& arc : partial.arcs) {
        sums[arc.head] += arc.label;
        sums[arc.tail] -= arc.label;
    }

    // Branch vertices ranked by partial sum, ties by spine position; the
    // reserved labels go out in ascending order so equal partial sums still
    // end up strictly separated.
    std::vector<std::pair<Vertex, Vertex>> spine_order = plan.spine_matching;
    std::map<Vertex, int> branch_pos;
    for (int pos : decomp.branch_positions) branch_pos[decomp.spine[pos]] = pos;
    std::sort(spine_order.begin(), spine_order.end(), [&](const auto& lhs, const auto& rhs) {
        Vertex lu = lhs.second, ru = rhs.second;
        if (sums[lu] != sums[ru]) return sums[lu] < sums[ru];
        return branch_pos.at(lu) < branch_pos.at(ru);
    });
    int next_label = alloc.spine_matching.lo;
    for (const auto& [x, u] : spine_order) {
        set_label(x, u, next_label);
        sums[u] += next_label;
        sums[x] -= next_label;
        ++next_label;
    }

    // Stems ranked by updated sum, ties by index; these arcs leave their
    // stems, so the labels go out in descending order to keep the ranking
    // strict after subtraction.
    std::vector<std::pair<Vertex, Vertex>> tip_order = plan.tip_matching;
    std::sort(tip_order.begin(), tip_order.end(), [&](const auto& lhs, const auto& rhs) {
        if (sums[lhs.first] != sums[rhs.first]) return sums[lhs.first] < sums[rhs.first];
        return lhs.first < rhs.first;
    });
    next_label = alloc.tip_matching.hi;
    for (const auto& [x, y] : tip_order) {
        set_label(x, y, next_label);
        sums[y] += next_label;
        sums[x] -= next_label;
        --next_label;
    }

    return partial;
}

namespace {

OrientedLabeling orient_path_tree(const Tree& t, const std::vector<Vertex>& spine) {
    const int m = t.edge_count();
    if (m == 0) {
        OrientedLabeling d;
        d.vertex_count = 1;
        return d;
    }

    // Map path-order labels onto the tree's own edge order.
    std::map<std::pair<Vertex, Vertex>, int> edge_index;
    for (int i = 0; i < m; ++i) {
        Edge e = t.edges()[i];
        edge_index[{std::min(e.a, e.b), std::max(e.a, e.b)}] = i;
    }
    std::vector<int> path_labels =
        m == 1 ? std::vector<int>{1} : antimagic_path_labels(m);
    std::vector<int> edge_labels(m, 0);
    for (int k = 0; k + 1 < static_cast<int>(spine.size()); ++k) {
        Vertex a = spine[k];
        Vertex b = spine[k + 1];
        edge_labels[edge_index.at({std::min(a, b), std::max(a, b)})] = path_labels[k];
    }
    return orient_bipartite(t, edge_labels);
}

}  // namespace

LobsterConstruction orient_lobster(const Tree& t) {
    LobsterConstruction result;
    result.tree_class = classify(t);
    if (result.tree_class == TreeClass::other) {
        throw unsupported_family_error("tree is not a lobster");
    }

    std::vector<Vertex> spine = find_spine(t);
    SpineDecomposition decomp = decompose(t, spine);

    if (decomp.branch_positions.empty()) {
        result.labeling = orient_path_tree(t, spine);
        return result;
    }

    const int p = decomp.spine_edge_count();
    SpineLabeling spine_labeling = label_spine(p, decomp.branch_positions);

    OrientedLabeling partial;
    partial.vertex_count = t.vertex_count();
    partial.arcs.reserve(t.edge_count());
    for (const Arc& arc : spine_labeling.labeling.arcs) {
        partial.arcs.push_back({spine[arc.tail], spine[arc.head], arc.label});
    }

    MatchingPlan plan = build_matchings(t, decomp);
    LabelAllocation alloc = allocate_labels(decomp, plan);

    std::vector<char> in_spine_matching(t.vertex_count(), 0);
    for (const auto& [x, u] : plan.spine_matching) in_spine_matching[x] = 1;
    std::map<Vertex, Vertex> matched_tip;
    for (const auto& [x, y] : plan.tip_matching) matched_tip[x] = y;

    // Pendant arcs in limb order: the matched ones wait for their reserved
    // block (label 0 for now), everything else takes its interval in
    // ascending endpoint order.
    int next_tip = alloc.unmatched_tips.lo;
    int next_leaf_limb = alloc.unmatched_leaf_limbs.lo;
    int next_stem = alloc.unmatched_stems.lo;
    for (Vertex x : decomp.limbs) {
        Vertex anchor = decomp.limb_anchor.at(x);
        auto tips_it = decomp.tip_children.find(x);
        bool is_leaf = tips_it == decomp.tip_children.end();
        if (in_spine_matching[x]) {
            partial.arcs.push_back({x, anchor, 0});
        } else if (is_leaf) {
            partial.arcs.push_back({x, anchor, next_leaf_limb++});
        } else {
            partial.arcs.push_back({x, anchor, next_stem++});
        }
        if (!is_leaf) {
            for (Vertex y : tips_it->second) {
                if (y == matched_tip.at(x)) {
                    partial.arcs.push_back({x, y, 0});
                } else {
                    partial.arcs.push_back({x, y, next_tip++});
                }
            }
        }
    }

    result.labeling = assign_matching_labels(std::move(partial), decomp, plan, alloc);
    if (!is_bijective_labeling(result.labeling)) {
        throw std::logic_error("lobster construction produced a non-bijective labeling");
    }
    result.decomposition = std::move(decomp);
    result.plan = std::move(plan);
    result.allocation = alloc;
    return result;
}

}  // namespace antimagic
