#include "antimagic/verify.hpp"

#include <algorithm>
#include <map>

#include "antimagic/lobster_labeling.hpp"

namespace antimagic {

namespace {

// The verifier keeps its own sum computation; it must not lean on the
// code paths it certifies.
bool raw_sums(const OrientedLabeling& d, std::vector<int>& sums) {
    sums.assign(d.vertex_count, 0);
    for (const Arc& arc : d.arcs) {
        if (arc.tail < 0 || arc.tail >= d.vertex_count ||
            arc.head < 0 || arc.head >= d.vertex_count) {
            return false;
        }
        sums[arc.head] += arc.label;
        sums[arc.tail] -= arc.label;
    }
    return true;
}

bool raw_bijective(const OrientedLabeling& d) {
    const int m = d.edge_count();
    std::vector<char> seen(m + 1, 0);
    for (const Arc& arc : d.arcs) {
        if (arc.label < 1 || arc.label > m || seen[arc.label]) return false;
        seen[arc.label] = 1;
    }
    return true;
}

std::vector<Collision> find_collisions(const std::vector<int>& sums,
                                       const std::vector<char>& include) {
    std::map<int, Vertex> first_seen;
    std::vector<Collision> collisions;
    for (Vertex u = 0; u < static_cast<Vertex>(sums.size()); ++u) {
        if (!include[u]) continue;
        auto [it, inserted] = first_seen.try_emplace(sums[u], u);
        if (!inserted) {
            collisions.push_back({it->second, u, sums[u]});
        }
    }
    return collisions;
}

}  // namespace

AntimagicReport verify_antimagic(const OrientedLabeling& d) {
    AntimagicReport report;
    std::vector<int> sums;
    report.structure_ok = raw_sums(d, sums);
    if (!report.structure_ok) return report;
    report.bijective = raw_bijective(d);

    std::vector<char> all(d.vertex_count, 1);
    report.collisions = find_collisions(sums, all);
    report.sorted_sums = std::move(sums);
    std::sort(report.sorted_sums.begin(), report.sorted_sums.end());
    return report;
}

MarkedPathReport verify_marked_path(const OrientedLabeling& d,
                                    const std::vector<int>& marked_positions) {
    MarkedPathReport report;
    const int m = d.edge_count();
    if (d.vertex_count != m + 1) return report;

    // Arc i must cover path edge (v_i, v_{i+1}) in either direction.
    std::vector<int> sums;
    if (!raw_sums(d, sums)) return report;
    for (int i = 0; i < m; ++i) {
        const Arc& arc = d.arcs[i];
        bool forward = arc.tail == i && arc.head == i + 1;
        bool backward = arc.tail == i + 1 && arc.head == i;
        if (!forward && !backward) return report;
    }
    report.path_shape_ok = true;
    report.bijective = raw_bijective(d);

    std::vector<char> marked(d.vertex_count, 0);
    for (int h : marked_positions) {
        if (h < 0 || h >= d.vertex_count) return report;
        marked[h] = 1;
    }

    report.marked_positive_ok = true;
    for (Vertex u = 0; u < d.vertex_count; ++u) {
        if (marked[u] && sums[u] < 1) {
            report.marked_positive_ok = false;
            report.marked_violations.push_back(u);
        }
    }

    report.unmarked_range_ok = true;
    for (Vertex u = 0; u < d.vertex_count; ++u) {
        if (!marked[u] && (sums[u] == 0 || sums[u] > m || sums[u] < -m)) {
            report.unmarked_range_ok = false;
            report.range_violations.push_back(u);
        }
    }

    std::vector<char> unmarked(d.vertex_count, 1);
    for (Vertex u = 0; u < d.vertex_count; ++u) unmarked[u] = !marked[u];
    report.collisions = find_collisions(sums, unmarked);
    report.unmarked_distinct_ok = report.collisions.empty();
    return report;
}

BandReport verify_band_structure(const OrientedLabeling& d, const SpineDecomposition& decomp,
                                 const MatchingPlan& plan) {
    BandReport report;
    std::vector<int> sums;
    if (!raw_sums(d, sums)) {
        report.checks.push_back({"structure", false, {}});
        return report;
    }

    const int p = decomp.spine_edge_count();
    const int tip_count = static_cast<int>(decomp.tips.size());
    const int leaf_limb_count = static_cast<int>(decomp.leaf_limbs.size());
    const int r = plan.matched_leaf_limb_count;
    const int branch_count = plan.branch_count();

    std::vector<char> on_spine(d.vertex_count, 0);
    std::vector<char> is_branch(d.vertex_count, 0);
    for (Vertex u : decomp.spine) on_spine[u] = 1;
    for (int pos : decomp.branch_positions) is_branch[decomp.spine[pos]] = 1;
    std::vector<char> is_leaf_limb(d.vertex_count, 0);
    for (Vertex u : decomp.leaf_limbs) is_leaf_limb[u] = 1;

    BandCheck tips{"tip sums in [p+1, p+|tips|]", true, {}};
    for (Vertex y : decomp.tips) {
        if (sums[y] < p + 1 || sums[y] > p + tip_count) {
            tips.ok = false;
            tips.violations.push_back(y);
        }
    }
    report.checks.push_back(std::move(tips));

    BandCheck limbs{"limb sums negative, magnitude >= p+|tips|+1", true, {}};
    for (Vertex x : decomp.limbs) {
        if (sums[x] >= 0 || -sums[x] < p + tip_count + 1) {
            limbs.ok = false;
            limbs.violations.push_back(x);
        }
    }
    report.checks.push_back(std::move(limbs));

    const int leaf_limb_cap = p + tip_count + leaf_limb_count - r + branch_count;
    BandCheck leaf_limbs{"leaf limb magnitudes <= p+|tips|+|leaf limbs|-r+|branches|", true, {}};
    const int stem_floor = 2 * p + tip_count + leaf_limb_count - r + 2;
    BandCheck stems{"stem magnitudes >= 2p+|tips|+|leaf limbs|-r+2", true, {}};
    for (Vertex x : decomp.limbs) {
        if (is_leaf_limb[x]) {
            if (-sums[x] > leaf_limb_cap) {
                leaf_limbs.ok = false;
                leaf_limbs.violations.push_back(x);
            }
        } else if (-sums[x] < stem_floor) {
            stems.ok = false;
            stems.violations.push_back(x);
        }
    }
    report.checks.push_back(std::move(leaf_limbs));
    report.checks.push_back(std::move(stems));

    BandCheck plain_spine{"plain spine magnitudes <= p", true, {}};
    for (Vertex z : decomp.spine) {
        if (!is_branch[z] && (sums[z] > p || sums[z] < -p)) {
            plain_spine.ok = false;
            plain_spine.violations.push_back(z);
        }
    }
    report.checks.push_back(std::move(plain_spine));

    const int branch_floor = p + tip_count + leaf_limb_count - r + 2;
    BandCheck branches{"branch sums >= p+|tips|+|leaf limbs|-r+2", true, {}};
    for (int pos : decomp.branch_positions) {
        Vertex u = decomp.spine[pos];
        if (sums[u] < branch_floor) {
            branches.ok = false;
            branches.violations.push_back(u);
        }
    }
    report.checks.push_back(std::move(branches));

    // Strict sum orders along the matching labels. Spine-matching labels were
    // assigned ascending along the branch ranking, so branch sums must rise
    // with the label; tip-matching labels were assigned descending along the
    // stem ranking, so stem sums must fall as the label rises.
    std::map<std::pair<Vertex, Vertex>, int> arc_label;
    for (const Arc& arc : d.arcs) arc_label[{arc.tail, arc.head}] = arc.label;

    auto order_check = [&](const std::vector<std::pair<Vertex, Vertex>>& matching,
                           bool use_tail, bool ascending, const char* name) {
        BandCheck check{name, true, {}};
        std::vector<std::pair<int, Vertex>> by_label;
        for (const auto& [a, b] : matching) {
            auto it = arc_label.find({a, b});
            if (it == arc_label.end()) {
                check.ok = false;
                report.checks.push_back(std::move(check));
                return;
            }
            by_label.emplace_back(it->second, use_tail ? a : b);
        }
        std::sort(by_label.begin(), by_label.end());
        for (size_t i = 0; i + 1 < by_label.size(); ++i) {
            int lhs = sums[by_label[i].second];
            int rhs = sums[by_label[i + 1].second];
            if (ascending ? lhs >= rhs : lhs <= rhs) {
                check.ok = false;
                check.violations.push_back(by_label[i + 1].second);
            }
        }
        report.checks.push_back(std::move(check));
    };
    order_check(plan.spine_matching, /*use_tail=*/false, /*ascending=*/true,
                "branch sums strictly increasing along spine-matching labels");
    order_check(plan.tip_matching, /*use_tail=*/true, /*ascending=*/false,
                "stem sums strictly increasing along the stem ranking");

    return report;
}

}  // namespace antimagic
