#include "antimagic/taxonomy.hpp"

#include <algorithm>
#include <queue>

namespace antimagic {

const char* to_string(TreeClass c) {
    switch (c) {
        case TreeClass::single_vertex: return "single-vertex";
        case TreeClass::single_edge: return "single-edge";
        case TreeClass::path: return "path";
        case TreeClass::caterpillar: return "caterpillar";
        case TreeClass::lobster: return "lobster";
        case TreeClass::other: return "other";
    }
    return "?";
}

namespace {

// Degree sequence of the subgraph induced by `alive`, plus a survivor count.
// Leaf removal works on (alive, deg) pairs so no Tree reconstruction is needed.
struct PeelState {
    std::vector<char> alive;
    std::vector<int> deg;
    int count = 0;
};

PeelState initial_state(const Tree& t) {
    PeelState st;
    st.alive.assign(t.vertex_count(), 1);
    st.deg.resize(t.vertex_count());
    for (Vertex u = 0; u < t.vertex_count(); ++u) st.deg[u] = t.degree(u);
    st.count = t.vertex_count();
    return st;
}

// Remove every vertex of degree exactly one, simultaneously.
void remove_leaves(const Tree& t, PeelState& st) {
    std::vector<Vertex> leaves;
    for (Vertex u = 0; u < t.vertex_count(); ++u) {
        if (st.alive[u] && st.deg[u] == 1) leaves.push_back(u);
    }
    for (Vertex u : leaves) {
        st.alive[u] = 0;
        --st.count;
        for (Vertex v : t.neighbors(u)) {
            if (st.alive[v]) --st.deg[v];
        }
    }
}

// A tree is a path iff every surviving vertex has induced degree <= 2.
// Covers the one- and two-vertex cases.
bool is_path_state(const PeelState& st) {
    for (Vertex u = 0; u < static_cast<Vertex>(st.deg.size()); ++u) {
        if (st.alive[u] && st.deg[u] > 2) return false;
    }
    return true;
}

// Distances from `start`; ties for the farthest vertex break toward the
// smallest index because vertices are scanned in ascending order.
std::vector<int> bfs_distances(const Tree& t, Vertex start) {
    std::vector<int> dist(t.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : t.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

Vertex farthest_smallest(const std::vector<int>& dist) {
    Vertex best = 0;
    for (Vertex u = 1; u < static_cast<Vertex>(dist.size()); ++u) {
        if (dist[u] > dist[best]) best = u;
    }
    return best;
}

}  // namespace

TreeClass classify(const Tree& t) {
    if (t.vertex_count() == 1) return TreeClass::single_vertex;
    if (t.vertex_count() == 2) return TreeClass::single_edge;

    PeelState st = initial_state(t);
    if (is_path_state(st)) return TreeClass::path;

    remove_leaves(t, st);
    if (is_path_state(st)) return TreeClass::caterpillar;

    remove_leaves(t, st);
    if (is_path_state(st)) return TreeClass::lobster;

    return TreeClass::other;
}

std::vector<Vertex> find_spine(const Tree& t) {
    if (t.vertex_count() == 1) return {0};

    Vertex a = farthest_smallest(bfs_distances(t, 0));
    std::vector<int> dist = bfs_distances(t, a);
    Vertex b = farthest_smallest(dist);

    // Walk back from b to a along strictly decreasing distance. The path in
    // a tree is unique; picking the smallest qualifying neighbor just keeps
    // the scan deterministic.
    std::vector<Vertex> path{b};
    Vertex cur = b;
    while (cur != a) {
        for (Vertex v : t.neighbors(cur)) {
            if (dist[v] == dist[cur] - 1) {
                cur = v;
                break;
            }
        }
        path.push_back(cur);
    }
    if (path.front() > path.back()) {
        std::reverse(path.begin(), path.end());
    }
    return path;
}

SpineDecomposition decompose(const Tree& t, const std::vector<Vertex>& spine) {
    if (spine.empty()) {
        throw std::invalid_argument("spine must be nonempty");
    }
    const int n = t.vertex_count();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) {
        Vertex u = spine[i];
        if (u < 0 || u >= n || pos[u] >= 0) {
            throw std::invalid_argument("spine is not a sequence of distinct vertices");
        }
        pos[u] = i;
    }
    for (size_t i = 0; i + 1 < spine.size(); ++i) {
        if (!t.has_edge(spine[i], spine[i + 1])) {
            throw std::invalid_argument("spine is not a path of the tree");
        }
    }
    if (spine.size() >= 2) {
        if (t.degree(spine.front()) != 1 || t.degree(spine.back()) != 1) {
            // An off-path neighbor at an endpoint would extend the path.
            throw std::invalid_argument("spine endpoints must be leaves (spine not a longest path)");
        }
    }

    SpineDecomposition d;
    d.spine = spine;
    const int p = d.spine_edge_count();
    for (int i = 1; i < p; ++i) {
        if (t.degree(spine[i]) >= 3) d.branch_positions.push_back(i);
    }

    for (Vertex u = 0; u < n; ++u) {
        if (pos[u] >= 0) continue;
        Vertex anchor = -1;
        for (Vertex v : t.neighbors(u)) {
            if (pos[v] >= 0) {
                anchor = v;
                break;
            }
        }
        if (anchor >= 0) {
            d.limbs.push_back(u);
            d.limb_anchor[u] = anchor;
            if (t.degree(u) == 1) d.leaf_limbs.push_back(u);
        }
    }

    for (Vertex u = 0; u < n; ++u) {
        if (pos[u] >= 0 || d.limb_anchor.count(u)) continue;
        if (t.degree(u) != 1) {
            throw unsupported_family_error("vertex " + std::to_string(u) +
                                           " lies beyond distance two from the spine");
        }
        Vertex parent = t.neighbors(u)[0];
        if (!d.limb_anchor.count(parent)) {
            throw unsupported_family_error("vertex " + std::to_string(u) +
                                           " lies beyond distance two from the spine");
        }
        d.tips.push_back(u);
        d.tip_children[parent].push_back(u);
    }

    return d;
}

}  // namespace antimagic
