#pragma once

#include <cstdint>

#include "antimagic/graph.hpp"

namespace antimagic {

/// Shape knobs for random lobster instances. Limbs only attach to internal
/// spine positions, and positions next to the spine ends get shorter legs
/// so the designated spine stays a longest path.
struct LobsterProfile {
    double branch_probability = 0.5;  // chance an internal spine vertex grows limbs
    int max_limbs_per_branch = 3;     // >= 1 when branching
    int max_tips_per_limb = 2;        // 0 makes every limb a leaf
};

/// Random lobster with `spine_edges` >= 2 spine edges. Identical seeds give
/// identical trees; the spine occupies vertices 0..spine_edges in order.
Tree random_lobster(int spine_edges, const LobsterProfile& profile, uint64_t seed);

/// Uniform random labeled tree on n >= 1 vertices via random integer-sequence
/// decoding; deterministic per seed.
Tree random_tree(int n, uint64_t seed);

}  // namespace antimagic
