#pragma once

#include "bei/graph.hpp"
#include "bei/ideal.hpp"

namespace bei {

inline constexpr uint32_t kDefaultChar = 32003;

/// Ambient ring k[x_1..x_n, y_1..y_n] for a graph on n vertices.
RingContext graph_ring(const Graph& g, uint32_t characteristic = kDefaultChar);

/// The maximal-minor binomial f_ij = x_i y_j - x_j y_i for i < j.
Polynomial edge_binomial(const RingContext& ring, int i, int j);

/// J_G: one generator per edge; edgeless graphs give the zero ideal.
Ideal binomial_edge_ideal(const Graph& g, uint32_t characteristic = kDefaultChar);

/// P_T(G): variables of T plus the edge ideals of the clique completions of
/// the components of G minus T, realized on the original labels.
struct PrimeComponent {
    VertexSet t;
    std::vector<VertexSet> components;
    Ideal ideal;
};

PrimeComponent prime_component(const Graph& g, const VertexSet& t,
                               uint32_t characteristic = kDefaultChar);

/// C(G): the empty set plus every T whose members are all cut points of the
/// induced graph on ([n] minus T) plus that member. Enumerates all 2^n subsets.
struct CutSetFamily {
    std::vector<VertexSet> sets; // sorted by (size, lex)

    bool contains(const VertexSet& s) const;
    bool operator==(const CutSetFamily& o) const { return sets == o.sets; }
};

CutSetFamily cut_sets(const Graph& g, int ceiling = kCensusCeiling);

/// The minimal primes P_T(G) for T in C(G), in the family's order.
std::vector<PrimeComponent> minimal_primes(const Graph& g,
                                           uint32_t characteristic = kDefaultChar,
                                           int ceiling = kCensusCeiling);

/// max over all subsets T of (n - |T| + number of components of G minus T).
int combinatorial_dim(const Graph& g, int ceiling = kCensusCeiling);

/// Simple paths between the endpoints of e with at least one intermediate
/// vertex, plus the monomials g_{P,t} attached to each path.
struct PathMonomialSystem {
    std::vector<std::vector<int>> paths; // intermediate vertex sequences
    std::vector<Polynomial> monomials;   // g_{P,t} for each path and 0 <= t <= s
};

PathMonomialSystem path_monomial_system(const Graph& g, Edge e, const RingContext& ring);

/// Generators of J_{G\e} : f_e as J_{(G\e)_e} plus the path monomials of e
/// taken in G. The direct edge contributes no monomial.
Ideal colon_generators(const Graph& g, Edge e, uint32_t characteristic = kDefaultChar);

/// True iff the combinatorial generators agree with the elimination colon
/// ideal_colon(J_{G\e}, f_e) as ideals.
bool colon_theorem_check(const Graph& g, Edge e, uint32_t characteristic = kDefaultChar);

/// C(G1 * G2) assembled from the component families of the factors; both
/// factors must be disconnected. Labels follow join(): G2 shifted by |G1|.
CutSetFamily join_cutsets(const Graph& g1, const Graph& g2, int ceiling = kCensusCeiling);

/// max{r1, r2, 3} for regularities of two graphs that are not both complete.
int predicted_join_regularity(int r1, int r2);

/// Iterated join of edgeless graphs with the given part sizes.
Graph complete_multipartite(const std::vector<int>& sizes);

} // namespace bei
