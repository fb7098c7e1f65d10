#include "doctest.h"

#include "antimagic/lobster_labeling.hpp"
#include "antimagic/path_labeling.hpp"
#include "antimagic/verify.hpp"

using namespace antimagic;

TEST_CASE("single oriented edge is antimagic") {
    OrientedLabeling d;
    d.vertex_count = 2;
    d.arcs = {{0, 1, 1}};
    AntimagicReport report = verify_antimagic(d);
    CHECK(report.antimagic());
    CHECK(report.sorted_sums == std::vector<int>{-1, 1});
}

TEST_CASE("duplicate labels fail the bijection verdict") {
    OrientedLabeling d;
    d.vertex_count = 3;
    d.arcs = {{0, 1, 1}, {1, 2, 1}};
    AntimagicReport report = verify_antimagic(d);
    CHECK_FALSE(report.bijective);
    CHECK_FALSE(report.antimagic());
}

TEST_CASE("collisions carry the offending pair") {
    // Symmetric 3-path: both ends get sum -1.
    OrientedLabeling d;
    d.vertex_count = 3;
    d.arcs = {{0, 1, 1}, {2, 1, 1}};
    AntimagicReport report = verify_antimagic(d);
    REQUIRE(report.collisions.size() == 1);
    CHECK(report.collisions[0].u == 0);
    CHECK(report.collisions[0].v == 2);
    CHECK(report.collisions[0].sum == -1);
}

TEST_CASE("out-of-range arcs yield a structural failure, not an exception") {
    OrientedLabeling d;
    d.vertex_count = 2;
    d.arcs = {{0, 9, 1}};
    AntimagicReport report = verify_antimagic(d);
    CHECK_FALSE(report.structure_ok);
    CHECK_FALSE(report.antimagic());
}

TEST_CASE("the reference labeling collides only at marked vertices") {
    std::vector<int> marks{3, 4, 7, 9, 10, 11};
    SpineLabeling s = label_spine(13, marks);
    AntimagicReport whole = verify_antimagic(s.labeling);
    CHECK_FALSE(whole.antimagic());
    std::vector<char> marked(14, 0);
    for (int h : marks) marked[h] = 1;
    for (const Collision& c : whole.collisions) {
        CHECK((marked[c.u] || marked[c.v]));
    }
    CHECK(verify_marked_path(s.labeling, marks).all_ok());
}

TEST_CASE("marked-path checks fail on constructed counterexamples") {
    SUBCASE("two equal off-mark sums") {
        OrientedLabeling d;
        d.vertex_count = 4;
        d.arcs = {{0, 1, 1}, {1, 2, 2}, {3, 2, 3}};  // sums: -1, -1, 5, -3
        MarkedPathReport report = verify_marked_path(d, {2});
        CHECK(report.path_shape_ok);
        CHECK_FALSE(report.unmarked_distinct_ok);
        REQUIRE(report.collisions.size() == 1);
        CHECK(report.collisions[0].sum == -1);
    }
    SUBCASE("marked vertex with positive entering sum passes") {
        OrientedLabeling d;
        d.vertex_count = 3;
        d.arcs = {{0, 1, 1}, {2, 1, 2}};  // marked sum 3
        MarkedPathReport report = verify_marked_path(d, {1});
        CHECK(report.marked_positive_ok);
        CHECK(report.all_ok());
    }
    SUBCASE("zero sum off the marks breaks the range condition") {
        OrientedLabeling d;
        d.vertex_count = 4;
        d.arcs = {{0, 1, 2}, {1, 2, 2}, {2, 3, 1}};  // not bijective, s(1) = 0
        MarkedPathReport report = verify_marked_path(d, {2});
        CHECK_FALSE(report.bijective);
        CHECK_FALSE(report.unmarked_range_ok);
    }
    SUBCASE("non-path arc layout is flagged") {
        OrientedLabeling d;
        d.vertex_count = 3;
        d.arcs = {{0, 2, 1}, {1, 2, 2}};
        CHECK_FALSE(verify_marked_path(d, {1}).path_shape_ok);
    }
}

TEST_CASE("band report accepts a fresh construction and flags a cross-band swap") {
    Tree t(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                {3, 7}, {3, 8}, {7, 9}, {8, 10}});
    LobsterConstruction built = orient_lobster(t);
    REQUIRE(built.decomposition.has_value());
    CHECK(verify_band_structure(built.labeling, *built.decomposition, *built.plan).all_ok());

    // Swap a spine label with a tip label: the tip sum leaves its band.
    OrientedLabeling corrupted = built.labeling;
    int spine_arc = -1, tip_arc = -1;
    for (int i = 0; i < corrupted.edge_count(); ++i) {
        if (corrupted.arcs[i].label == 1) spine_arc = i;
        if (corrupted.arcs[i].head == 9) tip_arc = i;
    }
    REQUIRE(spine_arc >= 0);
    REQUIRE(tip_arc >= 0);
    std::swap(corrupted.arcs[spine_arc].label, corrupted.arcs[tip_arc].label);
    BandReport report = verify_band_structure(corrupted, *built.decomposition, *built.plan);
    CHECK_FALSE(report.all_ok());
    REQUIRE(report.failed() != nullptr);
}

TEST_CASE("band checks are vacuous without tips") {
    Tree cat(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}});
    LobsterConstruction built = orient_lobster(cat);
    REQUIRE(built.decomposition.has_value());
    CHECK(built.decomposition->tips.empty());
    CHECK(verify_band_structure(built.labeling, *built.decomposition, *built.plan).all_ok());
}
