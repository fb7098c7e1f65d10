#pragma once

#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/taxonomy.hpp"

namespace antimagic {

struct MatchingPlan;  // lobster_labeling.hpp

/// Two vertices sharing a vertex-sum.
struct Collision {
    Vertex u = 0;
    Vertex v = 0;
    int sum = 0;
};

/// Evidence-carrying verdict on whether a labeled orientation is antimagic.
/// Everything here is recomputed from the arc list alone.
struct AntimagicReport {
    bool structure_ok = true;      // arc endpoints in range
    bool bijective = false;
    std::vector<int> sorted_sums;
    std::vector<Collision> collisions;

    bool antimagic() const { return structure_ok && bijective && collisions.empty(); }
};

AntimagicReport verify_antimagic(const OrientedLabeling& d);

/// Checks a labeled oriented path v_0 ... v_m against the marked-path
/// conditions: positive sums on marked vertices, |s| within [1, m] off the
/// marks, and pairwise-distinct off-mark sums.
struct MarkedPathReport {
    bool path_shape_ok = false;            // underlying edges are exactly (v_i, v_{i+1})
    bool bijective = false;
    bool marked_positive_ok = false;       // condition on marked vertices
    std::vector<Vertex> marked_violations;
    bool unmarked_range_ok = false;        // 1 <= |s| <= m off the marks
    std::vector<Vertex> range_violations;
    bool unmarked_distinct_ok = false;     // off-mark sums pairwise distinct
    std::vector<Collision> collisions;

    bool all_ok() const {
        return path_shape_ok && bijective && marked_positive_ok && unmarked_range_ok &&
               unmarked_distinct_ok;
    }
};

MarkedPathReport verify_marked_path(const OrientedLabeling& d,
                                    const std::vector<int>& marked_positions);

/// One named band invariant of the lobster construction.
struct BandCheck {
    std::string name;
    bool ok = true;
    std::vector<Vertex> violations;
};

struct BandReport {
    std::vector<BandCheck> checks;

    bool all_ok() const {
        for (const BandCheck& c : checks) {
            if (!c.ok) return false;
        }
        return true;
    }
    const BandCheck* failed() const {
        for (const BandCheck& c : checks) {
            if (!c.ok) return &c;
        }
        return nullptr;
    }
};

/// Certifies the sum bands of a constructed lobster orientation: tips in
/// [p+1, p+|Y|], limbs negative and pushed below the tip band, plain spine
/// vertices within [-p, p], branch vertices above everything, plus the two
/// strict orders along the matching labels.
BandReport verify_band_structure(const OrientedLabeling& d, const SpineDecomposition& decomp,
                                 const MatchingPlan& plan);

}  // namespace antimagic
