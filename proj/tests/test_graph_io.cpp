#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bei/graph_io.hpp"
#include "test_util.hpp"

using namespace bei;
using namespace bei::testutil;

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("3\n1 2\n2 3\n");
    CHECK(g == path_graph(3));
    CHECK(parse_edge_list("2\n").edge_count() == 0);
    CHECK(parse_edge_list("  3 \n # comment\n1 2\n").edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("2\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("nope\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    try {
        parse_edge_list("3\n1 2\n1 1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("graph6 parsing") {
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6("?").vertex_count() == 0);
    // 'D' is n=5; '?'=000000, '{'=111100 cover the ten pairs in column order,
    // so exactly (0,4),(1,4),(2,4),(3,4) are set: the star centered at 5
    CHECK(parse_graph6("D?{") == Graph(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}));
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);   // missing data bytes
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError); // extended sizes unsupported
}

TEST_CASE("round trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 1 + trial % 8, 0.5);
        CHECK(parse_graph6(emit_graph6(g)) == g);
        CHECK(parse_edge_list(emit_edge_list(g)) == g);
    }
}

TEST_CASE("malformed input raises parse errors, never crashes") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> byte(32, 126);
    for (int trial = 0; trial < 300; ++trial) {
        std::string junk;
        for (int k = len(rng); k > 0; --k) junk.push_back((char)byte(rng));
        try {
            Graph g = parse_graph6(junk);
            // chance-valid graph6 strings must still round-trip
            CHECK(parse_graph6(emit_graph6(g)) == g);
        } catch (const ParseError&) {
        } catch (const CapacityError&) {
        }
        try {
            (void)parse_edge_list(junk);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("format autodetection") {
    CHECK(parse_graph_input("3\n1 2\n2 3") == path_graph(3));
    CHECK(parse_graph_input("C~") == complete_graph(4));
    CHECK(parse_graph_input("C~", GraphFormat::Graph6) == complete_graph(4));
    CHECK_THROWS_AS(parse_graph_input("", GraphFormat::Auto), ParseError);
}
