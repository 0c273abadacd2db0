#pragma once

#include <random>
#include <string>
#include <vector>

#include "bei/edge_ideal.hpp"
#include "bei/ideal.hpp"

namespace bei::testutil {

inline RingContext ring(int n, uint32_t p = 32003) { return RingContext(n, p, 0); }

inline Polynomial pp(const RingContext& r, const std::string& text) {
    MonomialOrder ord = r.degrevlex();
    return Polynomial::parse(r, text, ord);
}

inline Ideal ideal_of(const RingContext& r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(pp(r, s));
    return Ideal(r, std::move(ps));
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
    es.push_back({1, n});
    return Graph(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
    return Graph(n, es);
}

/// Edges 12, 23, 24, 34, 35, 45: the five-vertex example graph with two
/// simplicial vertices (1 and 5).
inline Graph figure_graph() {
    return Graph(5, {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

inline Graph random_graph(std::mt19937& rng, int n, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng)) es.push_back({i, j});
    return Graph(n, es);
}

/// Verifies that every S-polynomial of basis reduces to zero (Buchberger's
/// criterion) and that the basis is monic and pairwise reduced.
inline bool is_reduced_groebner_basis(const std::vector<Polynomial>& basis, const PrimeField& F,
                                      const MonomialOrder& ord) {
    for (const auto& g : basis)
        if (g.is_zero() || g.lead().coef != 1) return false;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(s_polynomial(basis[i], basis[j], F, ord), basis, F, ord).is_zero())
                return false;
    for (size_t i = 0; i < basis.size(); ++i)
        for (const auto& t : basis[i].terms())
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i && basis[j].lead().mono.divides(t.mono)) return false;
    return true;
}

} // namespace bei::testutil
