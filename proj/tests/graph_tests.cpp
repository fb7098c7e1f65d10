#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "antimagic/graph.hpp"

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

// Arbitrary valid labeled orientation of a path for the property checks.
OrientedLabeling random_path_labeling(int m, std::mt19937_64& rng) {
    OrientedLabeling d;
    d.vertex_count = m + 1;
    std::vector<int> labels(m);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    for (int i = 0; i < m; ++i) {
        bool flip = rng() & 1;
        d.arcs.push_back({flip ? i + 1 : i, flip ? i : i + 1, labels[i]});
    }
    return d;
}

}  // namespace

TEST_CASE("tree construction validates its invariants") {
    CHECK_NOTHROW(Tree(1, {}));
    CHECK_NOTHROW(path_tree(5));
    CHECK_THROWS_AS(Tree(2, {}), std::invalid_argument);                    // missing edge
    CHECK_THROWS_AS(Tree(2, {{0, 0}}), std::invalid_argument);             // loop
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 1}}), std::invalid_argument);     // duplicate
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 5}}), std::invalid_argument);     // out of range
}

TEST_CASE("degree queries") {
    Tree p = path_tree(3);
    CHECK(p.degree(1) == 2);
    CHECK(p.degree(0) == 1);

    Tree star = star_tree(5);
    CHECK(star.degree(0) == 5);
    for (int leaf = 1; leaf <= 5; ++leaf) CHECK(star.degree(leaf) == 1);
    CHECK_THROWS_AS(star.degree(17), std::out_of_range);
}

TEST_CASE("vertex sums of a single arc") {
    OrientedLabeling d;
    d.vertex_count = 2;
    d.arcs = {{0, 1, 1}};
    VertexSums s = vertex_sums(d);
    CHECK(s[0] == -1);
    CHECK(s[1] == 1);
}

TEST_CASE("vertex sums reject out-of-range arcs") {
    OrientedLabeling d;
    d.vertex_count = 2;
    d.arcs = {{0, 7, 1}};
    CHECK_THROWS_AS(vertex_sums(d), std::out_of_range);
}

TEST_CASE("bijective labeling detection") {
    OrientedLabeling d;
    d.vertex_count = 4;
    d.arcs = {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}};
    CHECK(is_bijective_labeling(d));

    d.arcs[1].label = 1;
    CHECK_FALSE(is_bijective_labeling(d));

    d.arcs = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}};  // not starting at 1
    CHECK_FALSE(is_bijective_labeling(d));
}

TEST_CASE("sum of all vertex sums is zero") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        OrientedLabeling d = random_path_labeling(1 + static_cast<int>(rng() % 12), rng);
        VertexSums s = vertex_sums(d);
        CHECK(std::accumulate(s.begin(), s.end(), 0) == 0);
    }
}

TEST_CASE("reversing every arc negates every sum") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        OrientedLabeling d = random_path_labeling(1 + static_cast<int>(rng() % 12), rng);
        OrientedLabeling reversed = d;
        for (Arc& arc : reversed.arcs) std::swap(arc.tail, arc.head);
        VertexSums s = vertex_sums(d);
        VertexSums rs = vertex_sums(reversed);
        for (int u = 0; u < d.vertex_count; ++u) CHECK(rs[u] == -s[u]);
    }
}

TEST_CASE("vertex sums are permutation-equivariant") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        OrientedLabeling d = random_path_labeling(2 + static_cast<int>(rng() % 10), rng);
        std::vector<int> perm(d.vertex_count);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        OrientedLabeling relabeled = d;
        for (Arc& arc : relabeled.arcs) {
            arc.tail = perm[arc.tail];
            arc.head = perm[arc.head];
        }
        VertexSums s = vertex_sums(d);
        VertexSums ps = vertex_sums(relabeled);
        for (int u = 0; u < d.vertex_count; ++u) CHECK(ps[perm[u]] == s[u]);
    }
}
