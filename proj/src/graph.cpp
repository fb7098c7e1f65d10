#include "antimagic/graph.hpp"

#include <algorithm>
#include <numeric>

namespace antimagic {

Tree::Tree(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1) {
        throw std::invalid_argument("tree must have at least one vertex");
    }
    if (static_cast<int>(edges_.size()) != vertex_count_ - 1) {
        throw std::invalid_argument("tree on " + std::to_string(vertex_count_) +
                                    " vertices needs exactly " + std::to_string(vertex_count_ - 1) +
                                    " edges, got " + std::to_string(edges_.size()));
    }

    std::vector<int> deg(vertex_count_, 0);
    for (const Edge& e : edges_) {
        if (e.a < 0 || e.a >= vertex_count_ || e.b < 0 || e.b >= vertex_count_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.a == e.b) {
            throw std::invalid_argument("loop at vertex " + std::to_string(e.a));
        }
        ++deg[e.a];
        ++deg[e.b];
    }

    adj_start_.assign(vertex_count_ + 1, 0);
    for (Vertex u = 0; u < vertex_count_; ++u) {
        adj_start_[u + 1] = adj_start_[u] + deg[u];
    }
    adj_.resize(2 * edges_.size());
    std::vector<int> fill = adj_start_;
    for (const Edge& e : edges_) {
        adj_[fill[e.a]++] = e.b;
        adj_[fill[e.b]++] = e.a;
    }
    for (Vertex u = 0; u < vertex_count_; ++u) {
        auto first = adj_.begin() + adj_start_[u];
        auto last = adj_.begin() + adj_start_[u + 1];
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(u));
        }
    }

    // Connectivity: with n-1 simple edges, connected <=> acyclic.
    std::vector<char> seen(vertex_count_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != vertex_count_) {
        throw std::invalid_argument("edge list is not connected");
    }
}

std::span<const Vertex> Tree::neighbors(Vertex u) const {
    check_vertex(u);
    return {adj_.data() + adj_start_[u],
            static_cast<size_t>(adj_start_[u + 1] - adj_start_[u])};
}

int Tree::degree(Vertex u) const {
    check_vertex(u);
    return adj_start_[u + 1] - adj_start_[u];
}

bool Tree::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Tree::check_vertex(Vertex u) const {
    if (u < 0 || u >= vertex_count_) {
        throw std::out_of_range("vertex index " + std::to_string(u) + " out of range");
    }
}

VertexSums vertex_sums(const OrientedLabeling& d) {
    VertexSums sums(d.vertex_count, 0);
    for (const Arc& arc : d.arcs) {
        if (arc.tail < 0 || arc.tail >= d.vertex_count ||
            arc.head < 0 || arc.head >= d.vertex_count) {
            throw std::out_of_range("arc endpoint out of range");
        }
        sums[arc.head] += arc.label;
        sums[arc.tail] -= arc.label;
    }
    return sums;
}

bool is_bijective_labeling(const OrientedLabeling& d) {
    const int m = d.edge_count();
    std::vector<char> seen(m + 1, 0);
    for (const Arc& arc : d.arcs) {
        if (arc.label < 1 || arc.label > m || seen[arc.label]) {
            return false;
        }
        seen[arc.label] = 1;
    }
    return true;
}

}  // namespace antimagic
