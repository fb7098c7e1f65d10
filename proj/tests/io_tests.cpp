#include <string>

#include "doctest.h"

#include "antimagic/io.hpp"
#include "antimagic/lobster_labeling.hpp"
#include "antimagic/random_gen.hpp"
#include "antimagic/verify.hpp"

using namespace antimagic;

TEST_CASE("edge list parsing with first-appearance name order") {
    NamedTree input = parse_tree("0 1\n1 2\n");
    CHECK(input.tree.vertex_count() == 3);
    CHECK(input.names == std::vector<std::string>{"0", "1", "2"});
    CHECK(input.tree.degree(1) == 2);

    NamedTree named = parse_tree("alpha beta\nbeta gamma\n# comment\n\ngamma delta\n");
    CHECK(named.names == std::vector<std::string>{"alpha", "beta", "gamma", "delta"});
    CHECK(named.tree.edge_count() == 3);
}

TEST_CASE("JSON tree parsing") {
    NamedTree input = parse_tree(R"({"vertices": ["a", "b", "c"], "edges": [["a","b"], ["b","c"]]})");
    CHECK(input.tree.vertex_count() == 3);
    CHECK(input.names[0] == "a");
}

TEST_CASE("parse errors carry line numbers and vertex names") {
    CHECK_THROWS_WITH_AS(parse_tree("a\n"), doctest::Contains("line 1"), parse_error);
    CHECK_THROWS_WITH_AS(parse_tree("a b c\n"), doctest::Contains("line 1"), parse_error);
    CHECK_THROWS_WITH_AS(parse_tree("a b\nb c\nc a\n"), doctest::Contains("cycle"), parse_error);
    CHECK_THROWS_WITH_AS(parse_tree("a b\nc d\ne f\n"), doctest::Contains("disconnected"),
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_tree("a a\n"), doctest::Contains("loop"), parse_error);
    CHECK_THROWS_AS(parse_tree(""), parse_error);
}

TEST_CASE("labeling documents round-trip") {
    LobsterProfile profile;
    for (int i = 0; i < 100; ++i) {
        Tree t = random_lobster(2 + i % 20, profile, 4200 + i);
        LobsterConstruction built = orient_lobster(t);
        std::vector<std::string> names = index_names(t.vertex_count());
        std::string text = emit_labeling(built.labeling, names, verify_antimagic(built.labeling));

        ParsedLabeling parsed = parse_labeling(text);
        CHECK(parsed.names == names);
        REQUIRE(parsed.labeling.arcs.size() == built.labeling.arcs.size());
        for (size_t k = 0; k < parsed.labeling.arcs.size(); ++k) {
            CHECK(parsed.labeling.arcs[k].tail == built.labeling.arcs[k].tail);
            CHECK(parsed.labeling.arcs[k].head == built.labeling.arcs[k].head);
            CHECK(parsed.labeling.arcs[k].label == built.labeling.arcs[k].label);
        }
    }
}

TEST_CASE("labeling document content") {
    OrientedLabeling d;
    d.vertex_count = 2;
    d.arcs = {{0, 1, 1}};
    std::string text = emit_labeling(d, {"x", "y"}, verify_antimagic(d));
    CHECK(text.find("\"antimagic\": true") != std::string::npos);
    CHECK(text.find("\"x\": -1") != std::string::npos);
    CHECK(text.find("\"y\": 1") != std::string::npos);
}

TEST_CASE("DOT output of a single edge") {
    OrientedLabeling d;
    d.vertex_count = 2;
    d.arcs = {{0, 1, 1}};
    std::string dot = emit_dot(d, {"0", "1"});
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"1\" [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("s=-1") != std::string::npos);
    CHECK(dot.find("s=1") != std::string::npos);
}

TEST_CASE("arc line serialization is stable") {
    OrientedLabeling d;
    d.vertex_count = 3;
    d.arcs = {{0, 1, 2}, {2, 1, 1}};
    CHECK(emit_arc_lines(d) == "vertices 3\narc 0 1 2\narc 2 1 1\n");
}
