#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace antimagic {

using Vertex = int;

/// Unordered endpoint pair of a tree edge.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;
};

inline bool operator==(Edge lhs, Edge rhs) {
    return (lhs.a == rhs.a && lhs.b == rhs.b) || (lhs.a == rhs.b && lhs.b == rhs.a);
}

/// Immutable simple tree on dense vertex indices [0, vertex_count).
/// The constructor rejects anything that is not a connected acyclic
/// simple graph with edge count = vertex_count - 1.
class Tree {
public:
    Tree(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Neighbors of u in ascending index order.
    std::span<const Vertex> neighbors(Vertex u) const;

    int degree(Vertex u) const;

    bool has_edge(Vertex u, Vertex v) const;

private:
    void check_vertex(Vertex u) const;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_start_;   // CSR offsets, size vertex_count_ + 1
    std::vector<Vertex> adj_;
};

/// One labeled arc of an orientation: tail -> head carrying `label`.
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    int label = 0;
};

/// An orientation of some tree together with arc labels.
/// Plain data; invariants (underlying edge set, label bijection) are
/// the verifier's business, not enforced here.
struct OrientedLabeling {
    int vertex_count = 0;
    std::vector<Arc> arcs;

    int edge_count() const { return static_cast<int>(arcs.size()); }
};

/// Vertex-sums of an oriented labeling, indexed by vertex.
/// sums[u] = sum of labels entering u minus sum of labels leaving u.
/// Total over all vertices is always zero.
using VertexSums = std::vector<int>;

/// Throws std::out_of_range if an arc endpoint is outside [0, vertex_count).
VertexSums vertex_sums(const OrientedLabeling& d);

/// True iff the labels are exactly {1, ..., edge_count} with no repetition.
bool is_bijective_labeling(const OrientedLabeling& d);

}  // namespace antimagic
