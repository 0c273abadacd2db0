#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace bei;
using namespace bei::testutil;

TEST_CASE("ideal equality") {
    RingContext r = ring(3);
    SUBCASE("permuted generators") {
        Ideal a = ideal_of(r, {"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
        Ideal b = ideal_of(r, {"x2*y3 - x3*y2", "x1*y2 - x2*y1"});
        CHECK(ideal_equal(a, b));
    }
    SUBCASE("redundant generator") {
        Ideal a = ideal_of(r, {"x1"});
        Ideal b = ideal_of(r, {"x1", "x1^2"});
        CHECK(ideal_equal(a, b));
    }
    SUBCASE("different ideals differ") {
        CHECK_FALSE(ideal_equal(ideal_of(r, {"x1"}), ideal_of(r, {"x2"})));
    }
}

TEST_CASE("intersection examples") {
    RingContext r = ring(3);
    SUBCASE("I cap I") {
        Ideal I = ideal_of(r, {"x1*y2 - x2*y1"});
        CHECK(ideal_equal(ideal_intersection(I, I), I));
    }
    SUBCASE("coprime principal ideals") {
        Ideal I = ideal_of(r, {"x1"});
        Ideal J = ideal_of(r, {"y1"});
        CHECK(ideal_equal(ideal_intersection(I, J), ideal_of(r, {"x1*y1"})));
    }
    SUBCASE("minimal prime decomposition of the path") {
        // P_empty(P_3) = J of K_3 on {1,2,3}; P_{2}(P_3) = (x2, y2)
        Ideal pe = ideal_of(r, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"});
        Ideal p2 = ideal_of(r, {"x2", "y2"});
        Ideal J = ideal_of(r, {"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
        CHECK(ideal_equal(ideal_intersection(pe, p2), J));
    }
}

TEST_CASE("colon examples") {
    RingContext r = ring(3);
    SUBCASE("colon by a unit") {
        Ideal I = ideal_of(r, {"x1*y2 - x2*y1"});
        CHECK(ideal_equal(ideal_colon(I, pp(r, "1")), I));
    }
    SUBCASE("principal monomial colon") {
        Ideal I = ideal_of(r, {"x1*y1"});
        CHECK(ideal_equal(ideal_colon(I, pp(r, "x1")), ideal_of(r, {"y1"})));
    }
    SUBCASE("path ideal colon by the missing chord") {
        Ideal J = ideal_of(r, {"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
        Ideal C = ideal_colon(J, pp(r, "x1*y3 - x3*y1"));
        CHECK(ideal_equal(C, ideal_of(r, {"x2", "y2"})));
    }
}

TEST_CASE("colon and intersection properties on random ideals") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 + (trial % 2);
        Graph g = random_graph(rng, n, 0.7);
        Graph h = random_graph(rng, n, 0.7);
        Ideal I = binomial_edge_ideal(g);
        Ideal J = binomial_edge_ideal(h);
        if (I.is_zero_ideal() || J.is_zero_ideal()) continue;
        RingContext r = I.ring();
        PrimeField F = r.field();
        MonomialOrder ord = r.degrevlex();

        Ideal meet = ideal_intersection(I, J);
        CHECK(ideal_contains(I, meet));
        CHECK(ideal_contains(J, meet));
        // the product ideal sits inside the intersection
        for (const auto& a : I.generators())
            for (const auto& b : J.generators())
                CHECK(ideal_membership(Polynomial::mul(a, b, F, ord), meet));

        Polynomial f = I.generators()[0];
        Ideal Q = ideal_colon(J, f);
        CHECK(ideal_contains(Q, J)); // J subset J:f
        for (const auto& q : Q.generators())
            CHECK(ideal_membership(Polynomial::mul(q, f, F, ord), J));
    }
}

TEST_CASE("krull dimension and height") {
    SUBCASE("zero ideal has dimension 2n") {
        RingContext r = ring(2);
        CHECK(krull_dim(Ideal(r, {})) == 4);
    }
    SUBCASE("K2 edge ideal") {
        CHECK(krull_dim(binomial_edge_ideal(complete_graph(2))) == 3);
    }
    SUBCASE("P3 edge ideal") {
        CHECK(krull_dim(binomial_edge_ideal(path_graph(3))) == 4);
    }
    SUBCASE("heights of prime components") {
        RingContext r = ring(3);
        CHECK(height_of(ideal_of(r, {"x2", "y2"})) == 2);
        Ideal pe = ideal_of(r, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"});
        CHECK(height_of(pe) == 2);
        for (int n = 2; n <= 4; ++n)
            CHECK(height_of(binomial_edge_ideal(complete_graph(n))) == n - 1);
    }
    SUBCASE("unit ideal rejected") {
        RingContext r = ring(2);
        CHECK_THROWS_AS(krull_dim(ideal_of(r, {"1"})), std::domain_error);
    }
}
