#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

enum class SearchOutcome {
    witness_found,
    exhausted_no_witness,   // only possible in exhaustive mode
    inconclusive,           // randomized mode ran out of attempts
};

struct SearchOptions {
    int exhaustive_edge_limit = 9;    // up to here the full space is searched
    long long random_attempts = 200000;
    uint64_t seed = 0x5eed;
    int workers = 1;                  // exhaustive orientation space split across threads
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::inconclusive;
    std::optional<OrientedLabeling> witness;   // verified before being returned
    bool exhaustive = false;
    unsigned long long orientations_tried = 0;
};

/// Looks for an antimagic orientation of t. With m <= exhaustive_edge_limit
/// every orientation/labeling pair is covered (global arc reversal negates
/// all sums, so only half the orientations need visiting); otherwise random
/// (orientation, labeling) samples are drawn until the attempt budget runs
/// out. The verdict in exhaustive mode is reproducible and independent of
/// worker count.
SearchResult find_antimagic_orientation(const Tree& t, const SearchOptions& options = {});

/// All pairwise non-isomorphic trees on n vertices (1 <= n <= 10), in a
/// deterministic order. Every length-(n-2) sequence over [0, n) is decoded
/// to a labeled tree, reduced to a canonical rooted form at the tree
/// center, and deduplicated.
std::vector<Tree> enumerate_trees(int n);

/// enumerate_trees filtered down to the families the constructions accept
/// (everything except classification `other`).
std::vector<Tree> enumerate_lobsters(int n);

}  // namespace antimagic
