#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bei/edge_ideal.hpp"
#include "bei/resolution.hpp"

namespace bei {

class ResultCache;

enum class Verdict { Pass, Fail, Report };

std::string verdict_name(Verdict v);

/// Outcome of one executable statement on one graph. Failures carry a full
/// witness (both sides of the violated relation, graph6, supporting data).
struct CheckResult {
    std::string check;
    std::string key; // canonical form, hex
    Verdict verdict = Verdict::Report;
    nlohmann::json witness;
};

/// Per-graph verification summary keyed by canonical form. Regularity is 0
/// for edgeless graphs by convention and -1 when it was not computed.
struct CensusRecord {
    std::string key;
    int n = 0;
    int reg = -1;
    long c = 0;
    int l = 0;
    bool is_path = false;
    std::string graph6;
    std::vector<CheckResult> verdicts;
    BettiTable betti;
    bool has_betti = false;
};

/// reg(J_G), with the edgeless convention reg = 0. Uses and fills the cache
/// when one is supplied.
int graph_regularity(const Graph& g, uint32_t characteristic = kDefaultChar,
                     ResultCache* cache = nullptr, BettiTable* betti_out = nullptr);

// --- single-graph checks -------------------------------------------------

/// reg(J_G) <= n.
CheckResult check_mm_bound(const Graph& g, uint32_t characteristic = kDefaultChar,
                           std::optional<int> reg_hint = std::nullopt);

/// reg(J_G) >= (longest induced path length) + 1.
CheckResult check_lower_bound(const Graph& g, uint32_t characteristic = kDefaultChar,
                              std::optional<int> reg_hint = std::nullopt);

/// Report-only comparison of reg(J_G) against c(G) + 1; never asserted.
CheckResult check_conjecture_a(const Graph& g, uint32_t characteristic = kDefaultChar,
                               std::optional<int> reg_hint = std::nullopt);

/// Paths must attain reg = n; everything else must satisfy reg <= n - 1.
CheckResult check_conjecture_b(const Graph& g, uint32_t characteristic = kDefaultChar,
                               std::optional<int> reg_hint = std::nullopt);

/// The three short-exact-sequence inequalities for (G, e), with the colon
/// realized combinatorially and cross-checked against the elimination colon.
CheckResult check_ses_inequalities(const Graph& g, Edge e,
                                   uint32_t characteristic = kDefaultChar);

/// reg(J_{G\e} : f_e) <= n - 2 for a simplicial v of degree >= 2 and e
/// incident to v; also verifies the path-monomial ideal identity
/// I_G = (x_i, y_i : i in N(v) \ {w}).
CheckResult check_colon_lemma(const Graph& g, int v, Edge e,
                              uint32_t characteristic = kDefaultChar);

/// J_G equals the intersection of P_T(G) over T in C(G).
CheckResult check_decomposition(const Graph& g, uint32_t characteristic = kDefaultChar);

/// height P_T(G) = n + |T| - c(T) for every T in C(G).
CheckResult check_height_formula(const Graph& g, uint32_t characteristic = kDefaultChar);

/// combinatorial_dim(G) = Krull dimension of S/J_G.
CheckResult check_dim_agreement(const Graph& g, uint32_t characteristic = kDefaultChar);

// --- two-graph / family checks -------------------------------------------

/// reg(J_{G1*G2}) = max{reg G1, reg G2, 3}; joins of two complete graphs
/// must have regularity 2 instead.
CheckResult check_join_reg(const Graph& g1, const Graph& g2,
                           uint32_t characteristic = kDefaultChar);

/// join_cutsets formula output equals the enumerated C(G1*G2).
CheckResult check_join_cutsets(const Graph& g1, const Graph& g2);

/// Non-complete complete multipartite graphs have regularity exactly 3.
CheckResult check_multipartite(const std::vector<int>& sizes,
                               uint32_t characteristic = kDefaultChar);

/// c(G1*G2) = c(G1) * c(G2).
CheckResult check_clique_multiplicativity(const Graph& g1, const Graph& g2);

// --- census ----------------------------------------------------------------

/// Isomorphism classes of graphs on exactly n vertices, canonical
/// representatives sorted by canonical key.
std::vector<Graph> enumerate_graph_classes(int n, int ceiling = kCensusCeiling);

Graph graph_from_canonical(const std::vector<uint8_t>& key);

struct CensusOptions {
    uint32_t characteristic = kDefaultChar;
    int resolution_ceiling = 6;  // reg-bearing checks stop here
    int elimination_ceiling = 5; // intersection/colon-bearing checks stop here
    int census_ceiling = kCensusCeiling;
    int jobs = 1;
    ResultCache* cache = nullptr;
};

/// Known check names accepted by run_census.
const std::vector<std::string>& census_check_names();

/// Runs the selected checks over every isomorphism class with 1..n_max
/// vertices. Deterministic: records sorted by (n, canonical key); per-graph
/// checks run sequentially, graphs in parallel when jobs > 1.
std::vector<CensusRecord> run_census(int n_max, const std::vector<std::string>& checks,
                                     const CensusOptions& options = {});

} // namespace bei
