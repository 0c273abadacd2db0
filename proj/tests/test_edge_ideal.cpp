#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bei/verifier.hpp"
#include "test_util.hpp"

using namespace bei;
using namespace bei::testutil;

TEST_CASE("binomial edge ideal generators") {
    SUBCASE("K2") {
        Ideal J = binomial_edge_ideal(complete_graph(2));
        REQUIRE(J.generators().size() == 1);
        CHECK(J.generators()[0] == pp(J.ring(), "x1*y2 - x2*y1"));
    }
    SUBCASE("edgeless") {
        CHECK(binomial_edge_ideal(Graph(3)).is_zero_ideal());
    }
    SUBCASE("P3 has one generator per edge") {
        CHECK(binomial_edge_ideal(path_graph(3)).generators().size() == 2);
    }
}

TEST_CASE("prime components") {
    SUBCASE("P3 with T = {2}") {
        PrimeComponent pc = prime_component(path_graph(3), {2});
        CHECK(pc.components == std::vector<VertexSet>{{1}, {3}});
        CHECK(ideal_equal(pc.ideal, ideal_of(pc.ideal.ring(), {"x2", "y2"})));
    }
    SUBCASE("empty T on a connected graph completes to a clique") {
        PrimeComponent pc = prime_component(path_graph(3), {});
        CHECK(ideal_equal(pc.ideal, binomial_edge_ideal(complete_graph(3))));
    }
    SUBCASE("figure graph with T = {2}") {
        PrimeComponent pc = prime_component(figure_graph(), {2});
        CHECK(pc.components == std::vector<VertexSet>{{1}, {3, 4, 5}});
        RingContext r = pc.ideal.ring();
        Ideal expected = ideal_of(r, {"x2", "y2", "x3*y4 - x4*y3", "x3*y5 - x5*y3",
                                      "x4*y5 - x5*y4"});
        CHECK(ideal_equal(pc.ideal, expected));
    }
}

TEST_CASE("cut point families") {
    SUBCASE("complete graphs have only the empty set") {
        for (int n = 2; n <= 5; ++n) {
            CutSetFamily fam = cut_sets(complete_graph(n));
            REQUIRE(fam.sets.size() == 1);
            CHECK(fam.sets[0].empty());
        }
    }
    SUBCASE("P3") {
        CutSetFamily fam = cut_sets(path_graph(3));
        CHECK(fam.sets == std::vector<VertexSet>{{}, {2}});
    }
    SUBCASE("C4") {
        CutSetFamily fam = cut_sets(cycle_graph(4));
        CHECK(fam.sets == std::vector<VertexSet>{{}, {1, 3}, {2, 4}});
    }
    SUBCASE("the empty family characterizes unions of cliques") {
        // for connected graphs this is the complete-graph characterization;
        // a disjoint union of cliques also has no cut-point sets
        std::mt19937 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = random_graph(rng, 2 + trial % 5, 0.6);
            bool all_components_complete = true;
            for (const auto& comp : g.connected_components()) {
                Graph h = g.induced_subgraph(comp);
                if (!h.is_complete()) all_components_complete = false;
            }
            CHECK((cut_sets(g).sets.size() == 1) == all_components_complete);
            if (g.is_connected())
                CHECK((cut_sets(g).sets.size() == 1) == g.is_complete());
        }
    }
    SUBCASE("ceiling") {
        CHECK_THROWS_AS(cut_sets(Graph(9)), CapacityError);
    }
}

TEST_CASE("minimal primes") {
    CHECK(minimal_primes(complete_graph(3)).size() == 1);
    CHECK(minimal_primes(path_graph(3)).size() == 2);
    CHECK(minimal_primes(cycle_graph(4)).size() == 3);
}

TEST_CASE("combinatorial dimension") {
    for (int n = 2; n <= 5; ++n) CHECK(combinatorial_dim(complete_graph(n)) == n + 1);
    CHECK(combinatorial_dim(path_graph(3)) == 4);
    for (int n = 1; n <= 5; ++n) CHECK(combinatorial_dim(Graph(n)) == 2 * n);
}

TEST_CASE("path monomial systems") {
    RingContext r = ring(4);
    SUBCASE("direct edge contributes nothing") {
        PathMonomialSystem sys = path_monomial_system(complete_graph(2), {1, 2}, ring(2));
        CHECK(sys.paths.empty());
        CHECK(sys.monomials.empty());
    }
    SUBCASE("C4 long way around") {
        PathMonomialSystem sys = path_monomial_system(cycle_graph(4), {1, 2}, r);
        REQUIRE(sys.paths.size() == 1);
        CHECK(sys.paths[0] == std::vector<int>{4, 3});
        REQUIRE(sys.monomials.size() == 3);
        CHECK(sys.monomials[0] == pp(r, "x3*x4"));
        CHECK(sys.monomials[1] == pp(r, "y4*x3"));
        CHECK(sys.monomials[2] == pp(r, "y4*y3"));
    }
}

TEST_CASE("colon generators") {
    SUBCASE("triangle with the chord removed") {
        Graph k3 = complete_graph(3);
        Ideal C = colon_generators(k3, {1, 3});
        CHECK(ideal_equal(C, ideal_of(C.ring(), {"x2", "y2"})));
    }
    SUBCASE("star has no alternative path") {
        Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
        Ideal C = colon_generators(star, {1, 2});
        Graph completed = star.delete_edges({{1, 2}}).edge_completion({1, 2});
        CHECK(ideal_equal(C, binomial_edge_ideal(completed)));
    }
    SUBCASE("edge must be present") {
        CHECK_THROWS_AS(colon_generators(path_graph(3), {1, 3}), std::domain_error);
    }
}

TEST_CASE("colon theorem after edge removal") {
    SUBCASE("triangle") {
        CHECK(colon_theorem_check(complete_graph(3), {1, 3}));
    }
    SUBCASE("C4") {
        CHECK(colon_theorem_check(cycle_graph(4), {1, 2}));
    }
    SUBCASE("P3 leaf edge") {
        CHECK(colon_theorem_check(path_graph(3), {1, 2}));
    }
    SUBCASE("every edge of every graph on four vertices") {
        for (const Graph& g : enumerate_graph_classes(4))
            for (const auto& e : g.edges()) CHECK(colon_theorem_check(g, e));
    }
}

TEST_CASE("join cut set formula") {
    SUBCASE("two pairs of isolated vertices give K22") {
        CutSetFamily fam = join_cutsets(Graph(2), Graph(2));
        CHECK(fam.sets == std::vector<VertexSet>{{}, {1, 2}, {3, 4}});
        CHECK(fam == cut_sets(join(Graph(2), Graph(2))));
    }
    SUBCASE("mixed component structures") {
        Graph g1(3, {{1, 2}});      // K2 + K1
        Graph g2(2);                // 2 K1
        CHECK(join_cutsets(g1, g2) == cut_sets(join(g1, g2)));
        Graph g3(4, {{1, 2}, {2, 3}}); // P3 + K1
        CHECK(join_cutsets(g3, g2) == cut_sets(join(g3, g2)));
        Graph g4(4, {{1, 2}, {3, 4}}); // K2 + K2
        CHECK(join_cutsets(g3, g4) == cut_sets(join(g3, g4)));
    }
    SUBCASE("connected factors are rejected") {
        CHECK_THROWS_AS(join_cutsets(path_graph(2), Graph(2)), std::domain_error);
    }
}

TEST_CASE("predicted join regularity") {
    CHECK(predicted_join_regularity(0, 0) == 3);
    CHECK(predicted_join_regularity(3, 2) == 3);
    CHECK(predicted_join_regularity(5, 3) == 5);
}

TEST_CASE("complete multipartite construction") {
    CHECK(canonical_form(complete_multipartite({2, 2})) == canonical_form(cycle_graph(4)));
    CHECK(complete_multipartite({1, 1, 1, 1}) == complete_graph(4));
    Graph k13 = complete_multipartite({1, 3});
    CHECK(k13.vertex_count() == 4);
    CHECK(k13.edge_count() == 3);
    CHECK(k13.degree(1) == 3);
    CHECK_THROWS_AS(complete_multipartite({}), std::domain_error);
}

TEST_CASE("decomposition, height, and dimension agree on the small census") {
    for (int n = 2; n <= 4; ++n) {
        for (const Graph& g : enumerate_graph_classes(n)) {
            Ideal J = binomial_edge_ideal(g);
            auto primes = minimal_primes(g);

            Ideal meet = primes[0].ideal;
            for (size_t k = 1; k < primes.size(); ++k)
                meet = ideal_intersection(meet, primes[k].ideal);
            CHECK(ideal_equal(J, meet));

            for (const auto& pc : primes) {
                if (pc.ideal.is_zero_ideal()) continue;
                CHECK(height_of(pc.ideal) == n + (int)pc.t.size() - (int)pc.components.size());
            }
            CHECK(combinatorial_dim(g) == krull_dim(J));
        }
    }
}
