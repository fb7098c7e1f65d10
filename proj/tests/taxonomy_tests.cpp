#include <algorithm>
#include <queue>

#include "doctest.h"

#include "antimagic/search.hpp"
#include "antimagic/taxonomy.hpp"

using namespace antimagic;

namespace {

Tree path_tree(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Tree(n, edges);
}

Tree star_tree(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Tree(leaves + 1, edges);
}

// Spider: `legs` legs of length `len` hanging off vertex 0.
Tree spider_tree(int legs, int len) {
    std::vector<Edge> edges;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int k = 0; k < len; ++k) {
            edges.push_back({prev, next});
            prev = next++;
        }
    }
    return Tree(next, edges);
}

// Shared across the sweep tests below; the n = 10 enumeration is the
// expensive part and only needs doing once.
const std::vector<Tree>& all_trees(int n) {
    static std::vector<std::vector<Tree>> cache(11);
    if (cache[n].empty()) cache[n] = enumerate_trees(n);
    return cache[n];
}

std::vector<Tree> lobsters_only(int n) {
    std::vector<Tree> out;
    for (const Tree& t : all_trees(n)) {
        if (classify(t) != TreeClass::other) out.push_back(t);
    }
    return out;
}

// --- independent oracles -------------------------------------------------

std::vector<int> bfs_dist(const Tree& t, Vertex start) {
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

// Diameter by all-pairs breadth-first search.
int diameter_oracle(const Tree& t) {
    int best = 0;
    for (Vertex u = 0; u < t.vertex_count(); ++u) {
        for (int d : bfs_dist(t, u)) best = std::max(best, d);
    }
    return best;
}

// Literal definition chase on an induced subgraph given by `alive`.
struct Induced {
    const Tree* t;
    std::vector<char> alive;

    int deg(Vertex u) const {
        int d = 0;
        for (Vertex v : t->neighbors(u)) d += alive[v];
        return d;
    }
    int order() const {
        int c = 0;
        for (char a : alive) c += a;
        return c;
    }
    bool is_path() const {
        // A tree is a path exactly when its longest path visits every vertex,
        // which for the induced subtree reduces to all degrees <= 2.
        for (Vertex u = 0; u < t->vertex_count(); ++u) {
            if (alive[u] && deg(u) > 2) return false;
        }
        return true;
    }
    void strip_leaves() {
        std::vector<Vertex> leaves;
        for (Vertex u = 0; u < t->vertex_count(); ++u) {
            if (alive[u] && deg(u) == 1) leaves.push_back(u);
        }
        for (Vertex u : leaves) alive[u] = 0;
    }
};

TreeClass classify_oracle(const Tree& t) {
    if (t.vertex_count() == 1) return TreeClass::single_vertex;
    if (t.vertex_count() == 2) return TreeClass::single_edge;
    Induced g{&t, std::vector<char>(t.vertex_count(), 1)};
    if (g.is_path()) return TreeClass::path;
    g.strip_leaves();
    if (g.is_path()) return TreeClass::caterpillar;
    g.strip_leaves();
    if (g.is_path()) return TreeClass::lobster;
    return TreeClass::other;
}

}  // namespace

TEST_CASE("classification basics") {
    CHECK(classify(Tree(1, {})) == TreeClass::single_vertex);
    CHECK(classify(Tree(2, {{0, 1}})) == TreeClass::single_edge);
    CHECK(classify(path_tree(6)) == TreeClass::path);
    CHECK(classify(star_tree(3)) == TreeClass::caterpillar);
}

TEST_CASE("spider with three legs of length two is a lobster, not a caterpillar") {
    Tree spider = spider_tree(3, 2);
    REQUIRE(spider.vertex_count() == 7);
    CHECK(classify(spider) == TreeClass::lobster);
    CHECK(classify_oracle(spider) == TreeClass::lobster);
}

TEST_CASE("spider with three legs of length three is out of family") {
    Tree spider = spider_tree(3, 3);
    REQUIRE(spider.vertex_count() == 10);
    CHECK(classify(spider) == TreeClass::other);
    CHECK(classify_oracle(spider) == TreeClass::other);
}

TEST_CASE("classify agrees with the literal-definition oracle on all small trees") {
    for (int n = 1; n <= 10; ++n) {
        for (const Tree& t : all_trees(n)) {
            CHECK(classify(t) == classify_oracle(t));
        }
    }
}

TEST_CASE("the triple-length-three spider is the only out-of-family tree through ten vertices") {
    for (int n = 1; n <= 9; ++n) {
        CHECK(lobsters_only(n).size() == all_trees(n).size());
    }
    CHECK(lobsters_only(10).size() == all_trees(10).size() - 1);
}

TEST_CASE("find_spine on a bare path returns the path itself") {
    std::vector<Vertex> spine = find_spine(path_tree(4));
    CHECK(spine == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("find_spine of a star passes through the center") {
    std::vector<Vertex> spine = find_spine(star_tree(4));
    REQUIRE(spine.size() == 3);
    CHECK(spine[1] == 0);
    CHECK(spine.front() < spine.back());
}

TEST_CASE("find_spine length equals the brute-force diameter") {
    for (int n = 1; n <= 10; ++n) {
        for (const Tree& t : all_trees(n)) {
            CHECK(static_cast<int>(find_spine(t).size()) - 1 == diameter_oracle(t));
        }
    }
}

TEST_CASE("find_spine is deterministic") {
    for (const Tree& t : all_trees(8)) {
        CHECK(find_spine(t) == find_spine(t));
    }
}

TEST_CASE("decompose of a path has empty sets") {
    Tree p = path_tree(5);
    SpineDecomposition d = decompose(p, find_spine(p));
    CHECK(d.branch_positions.empty());
    CHECK(d.limbs.empty());
    CHECK(d.tips.empty());
}

TEST_CASE("decompose of a star: center is the single branch vertex") {
    // The spine runs leaf-center-leaf, so a k-leaf star keeps k-2 limbs.
    for (int leaves : {5, 6}) {
        Tree star = star_tree(leaves);
        SpineDecomposition d = decompose(star, find_spine(star));
        CHECK(d.branch_positions == std::vector<int>{1});
        CHECK(static_cast<int>(d.limbs.size()) == leaves - 2);
        CHECK(d.leaf_limbs == d.limbs);
        CHECK(d.tips.empty());
    }
}

TEST_CASE("decompose of a caterpillar puts every off-spine vertex among the leaf limbs") {
    // Path 0-1-2-3-4 with single leaves on 1, 2, 3.
    Tree cat(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}});
    SpineDecomposition d = decompose(cat, find_spine(cat));
    CHECK(d.branch_positions == std::vector<int>{1, 2, 3});
    CHECK(d.limbs == std::vector<Vertex>{5, 6, 7});
    CHECK(d.leaf_limbs == d.limbs);
    CHECK(d.tips.empty());
}

TEST_CASE("decompose rejects paths that are not longest") {
    Tree spider = spider_tree(3, 2);
    // 0 is the center; a path ending there is not longest.
    CHECK_THROWS_AS(decompose(spider, std::vector<Vertex>{1, 0}), std::invalid_argument);
}

TEST_CASE("decompose flags vertices beyond distance two") {
    Tree bad = spider_tree(3, 3);
    CHECK_THROWS_AS(decompose(bad, find_spine(bad)), unsupported_family_error);
}

TEST_CASE("decomposition partitions the vertex set with the distance structure") {
    for (int n = 4; n <= 10; ++n) {
        for (const Tree& t : lobsters_only(n)) {
            std::vector<Vertex> spine = find_spine(t);
            SpineDecomposition d = decompose(t, spine);

            std::vector<int> part(t.vertex_count(), 0);  // 1 spine, 2 limb, 3 tip
            for (Vertex u : d.spine) part[u] = 1;
            for (Vertex u : d.limbs) {
                CHECK(part[u] == 0);
                part[u] = 2;
            }
            for (Vertex u : d.tips) {
                CHECK(part[u] == 0);
                part[u] = 3;
            }
            for (Vertex u = 0; u < t.vertex_count(); ++u) CHECK(part[u] != 0);

            // Limbs sit at distance one from the spine, tips at distance two.
            std::vector<int> dist_to_spine(t.vertex_count(), -1);
            std::queue<Vertex> q;
            for (Vertex u : d.spine) {
                dist_to_spine[u] = 0;
                q.push(u);
            }
            while (!q.empty()) {
                Vertex u = q.front();
                q.pop();
                for (Vertex v : t.neighbors(u)) {
                    if (dist_to_spine[v] < 0) {
                        dist_to_spine[v] = dist_to_spine[u] + 1;
                        q.push(v);
                    }
                }
            }
            for (Vertex u = 0; u < t.vertex_count(); ++u) {
                if (part[u] == 2) CHECK(dist_to_spine[u] == 1);
                if (part[u] == 3) CHECK(dist_to_spine[u] == 2);
            }

            // Each limb anchors at exactly one spine vertex, which branches.
            std::vector<char> is_branch(t.vertex_count(), 0);
            for (int pos : d.branch_positions) {
                CHECK(pos >= 1);
                CHECK(pos <= d.spine_edge_count() - 1);
                is_branch[d.spine[pos]] = 1;
            }
            for (Vertex x : d.limbs) {
                int spine_neighbors = 0;
                for (Vertex v : t.neighbors(x)) spine_neighbors += (part[v] == 1);
                CHECK(spine_neighbors == 1);
                CHECK(is_branch[d.limb_anchor.at(x)]);
            }
            for (Vertex y : d.tips) {
                CHECK(t.degree(y) == 1);
                CHECK(part[t.neighbors(y)[0]] == 2);
            }
        }
    }
}
