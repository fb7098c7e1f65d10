#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

/// Most specific class first; classification always reports the most
/// specific label that applies.
enum class TreeClass {
    single_vertex,
    single_edge,
    path,
    caterpillar,
    lobster,
    other,
};

const char* to_string(TreeClass c);

/// Thrown when an operation is asked to handle a tree family it does not
/// support (classification `other`, or a spine decomposition that turns
/// out not to have lobster structure).
class unsupported_family_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterated leaf removal: path if the tree is a path; caterpillar if one
/// round of leaf removal leaves a path; lobster if two rounds do.
/// Trees on one or two vertices get their own labels.
TreeClass classify(const Tree& t);

/// A longest path, found by two breadth-first sweeps with all ties broken
/// toward the smallest vertex index, then oriented so the endpoint with
/// the smaller index comes first. Deterministic; its length equals the
/// tree diameter.
std::vector<Vertex> find_spine(const Tree& t);

/// Partition of a lobster around a spine v_0 ... v_p:
///   - branch_positions: spine positions (strictly increasing) whose vertex
///     has tree-degree >= 3; always internal to the spine
///   - limbs: off-spine vertices adjacent to the spine (each to exactly one
///     spine vertex, which is a branch vertex)
///   - leaf_limbs: the limbs that are leaves of the tree
///   - tips: all remaining vertices; each is a leaf hanging from a limb
struct SpineDecomposition {
    std::vector<Vertex> spine;
    std::vector<int> branch_positions;
    std::vector<Vertex> limbs;
    std::vector<Vertex> leaf_limbs;
    std::vector<Vertex> tips;
    std::map<Vertex, Vertex> limb_anchor;                 // limb -> its spine neighbor
    std::map<Vertex, std::vector<Vertex>> tip_children;   // limb -> its tips, ascending

    int spine_edge_count() const { return static_cast<int>(spine.size()) - 1; }
    int branch_count() const { return static_cast<int>(branch_positions.size()); }
    int stem_count() const {
        return static_cast<int>(limbs.size()) - static_cast<int>(leaf_limbs.size());
    }
};

/// Computes the decomposition for `spine`, which must be a longest path
/// of t. Throws unsupported_family_error if some vertex sits at distance
/// greater than two from the spine (i.e. t is not a lobster), and
/// std::invalid_argument if `spine` is not a path of t with leaf
/// endpoints. For a path input all sets come back empty.
SpineDecomposition decompose(const Tree& t, const std::vector<Vertex>& spine);

}  // namespace antimagic
