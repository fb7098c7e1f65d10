#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/path_labeling.hpp"
#include "antimagic/taxonomy.hpp"

namespace antimagic {

/// The two edge-disjoint matchings of the construction: one limb->spine arc
/// per branch vertex, and one limb->tip arc per stem (limb with tips).
struct MatchingPlan {
    std::vector<std::pair<Vertex, Vertex>> spine_matching;  // (limb, branch vertex), by branch position
    std::vector<std::pair<Vertex, Vertex>> tip_matching;    // (stem, tip), by stem index
    int matched_leaf_limb_count = 0;  // spine_matching edges whose limb is a leaf

    int branch_count() const { return static_cast<int>(spine_matching.size()); }
    int stem_count() const { return static_cast<int>(tip_matching.size()); }
};

/// Closed integer interval of labels; empty when hi < lo.
struct LabelInterval {
    int lo = 1;
    int hi = 0;

    int size() const { return hi < lo ? 0 : hi - lo + 1; }
    bool contains(int label) const { return label >= lo && label <= hi; }
};

/// The six disjoint label intervals that partition [1, m]:
/// spine edges first, then the tip-side arcs, then the spine-side arcs,
/// with both matchings getting reserved blocks.
struct LabelAllocation {
    LabelInterval spine;                 // [1, p]
    LabelInterval tip_matching;          // [p+1, p+|tip matching|]
    LabelInterval unmatched_tips;        // remaining limb->tip arcs
    LabelInterval unmatched_leaf_limbs;  // leaf limbs not in the spine matching
    LabelInterval spine_matching;        // reserved for the spine matching
    LabelInterval unmatched_stems;       // stems not in the spine matching
};

/// Directions for all non-spine edges: every edge incident to a limb points
/// away from the limb (into the spine or into a tip). Pairs are (tail, head).
std::vector<std::pair<Vertex, Vertex>> orient_pendants(const SpineDecomposition& decomp);

/// Greedy matchings: each branch vertex takes its smallest-index limb
/// neighbor; each stem takes its smallest-index tip.
MatchingPlan build_matchings(const Tree& t, const SpineDecomposition& decomp);

/// Splits [1, m] into the six intervals. Throws std::logic_error if the
/// interval sizes fail to add up to m (would indicate a decomposition bug).
LabelAllocation allocate_labels(const SpineDecomposition& decomp, const MatchingPlan& plan);

/// Completes a partial labeling in which exactly the matching arcs carry
/// label 0. Branch vertices are ranked by their partial sums (ties by spine
/// position) and receive the reserved spine-matching labels in ascending
/// order; stems are then ranked by their updated sums (ties by index) and
/// receive the tip-matching labels in descending order, which keeps both
/// rankings strictly increasing in the final sums.
OrientedLabeling assign_matching_labels(OrientedLabeling partial, const SpineDecomposition& decomp,
                                        const MatchingPlan& plan, const LabelAllocation& alloc);

/// Everything produced while orienting one tree. The decomposition, plan
/// and allocation are present exactly when the four-step construction ran
/// (i.e. the input was not a bare path).
struct LobsterConstruction {
    TreeClass tree_class = TreeClass::other;
    OrientedLabeling labeling;
    std::optional<SpineDecomposition> decomposition;
    std::optional<MatchingPlan> plan;
    std::optional<LabelAllocation> allocation;
};

/// Antimagic orientation of a lobster (paths and degenerate cases included).
/// Paths are labeled directly and oriented between color classes; anything
/// else runs the spine/matching construction. Throws
/// unsupported_family_error when the tree is not a lobster.
LobsterConstruction orient_lobster(const Tree& t);

}  // namespace antimagic
