#include "bei/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "bei/cache.hpp"
#include "bei/graph_io.hpp"

using nlohmann::json;

namespace bei {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Report: return "report";
    }
    return "?";
}

namespace {

std::string key_of(const Graph& g) { return to_hex(canonical_form(g, 31)); }

json gb_strings(const Ideal& I) {
    json arr = json::array();
    for (const auto& p : I.groebner(I.ring().degrevlex())) arr.push_back(p.to_string(I.ring()));
    return arr;
}

json betti_json(const BettiTable& t) {
    json arr = json::array();
    for (const auto& [ij, b] : t.entries)
        arr.push_back(json::array({ij.first, ij.second, b}));
    return arr;
}

CheckResult make_result(const std::string& check, const Graph& g, Verdict v, json witness) {
    return CheckResult{check, key_of(g), v, std::move(witness)};
}

} // namespace

int graph_regularity(const Graph& g, uint32_t characteristic, ResultCache* cache,
                     BettiTable* betti_out) {
    if (g.edge_count() == 0) {
        if (betti_out) {
            betti_out->entries.clear();
            betti_out->entries[{0, 0}] = 1;
        }
        return 0; // edgeless convention: J_G = (0)
    }
    std::string key = key_of(g);
    if (cache) {
        if (auto hit = cache->get(key, characteristic)) {
            if (betti_out) *betti_out = hit->betti;
            return hit->reg;
        }
    }
    Ideal J = binomial_edge_ideal(g, characteristic);
    BettiTable t = betti_table(J);
    int reg = t.max_strand() + 1;
    if (betti_out) *betti_out = t;
    if (cache) {
        CacheEntry e;
        e.key = key;
        e.characteristic = characteristic;
        e.n = g.vertex_count();
        e.reg = reg;
        e.betti = t;
        cache->put(e);
    }
    return reg;
}

namespace {

// shared preamble for the regularity-bound checks; returns true when the
// check should proceed, otherwise fills the skip result
bool reg_check_setup(const std::string& name, const Graph& g, uint32_t p,
                     std::optional<int> reg_hint, int& reg, CheckResult& skip) {
    if (g.edge_count() == 0) {
        skip = make_result(name, g, Verdict::Report,
                           json{{"skipped", "edgeless graph; reg recorded 0 by convention"}});
        return false;
    }
    reg = reg_hint ? *reg_hint : graph_regularity(g, p);
    return true;
}

json fail_witness(const Graph& g, uint32_t p, json extra) {
    Ideal J = binomial_edge_ideal(g, p);
    extra["graph6"] = emit_graph6(g);
    extra["groebner"] = gb_strings(J);
    extra["betti"] = betti_json(betti_table(J));
    return extra;
}

} // namespace

CheckResult check_mm_bound(const Graph& g, uint32_t p, std::optional<int> reg_hint) {
    int reg = 0;
    CheckResult skip;
    if (!reg_check_setup("mm_bound", g, p, reg_hint, reg, skip)) return skip;
    int n = g.vertex_count();
    if (reg <= n)
        return make_result("mm_bound", g, Verdict::Pass, json{{"reg", reg}, {"n", n}});
    return make_result("mm_bound", g, Verdict::Fail,
                       fail_witness(g, p, json{{"reg", reg}, {"n", n}}));
}

CheckResult check_lower_bound(const Graph& g, uint32_t p, std::optional<int> reg_hint) {
    int reg = 0;
    CheckResult skip;
    if (!reg_check_setup("lower_bound", g, p, reg_hint, reg, skip)) return skip;
    int l = g.longest_induced_path_length();
    if (reg >= l + 1)
        return make_result("lower_bound", g, Verdict::Pass, json{{"reg", reg}, {"l", l}});
    return make_result("lower_bound", g, Verdict::Fail,
                       fail_witness(g, p, json{{"reg", reg}, {"l", l}}));
}

CheckResult check_conjecture_a(const Graph& g, uint32_t p, std::optional<int> reg_hint) {
    int reg = 0;
    CheckResult skip;
    if (!reg_check_setup("conjecture_a", g, p, reg_hint, reg, skip)) return skip;
    long c = g.clique_count();
    json w{{"reg", reg}, {"c", c}, {"bound", c + 1}, {"violated", reg > c + 1}};
    // open conjecture: violations are reported, never asserted
    return make_result("conjecture_a", g, Verdict::Report,
                       reg > c + 1 ? fail_witness(g, p, w) : w);
}

CheckResult check_conjecture_b(const Graph& g, uint32_t p, std::optional<int> reg_hint) {
    int reg = 0;
    CheckResult skip;
    if (!reg_check_setup("conjecture_b", g, p, reg_hint, reg, skip)) return skip;
    int n = g.vertex_count();
    bool path = g.is_path();
    bool ok = path ? reg == n : reg <= n - 1;
    json w{{"reg", reg}, {"n", n}, {"is_path", path}};
    if (ok) return make_result("conjecture_b", g, Verdict::Pass, w);
    return make_result("conjecture_b", g, Verdict::Fail, fail_witness(g, p, w));
}

CheckResult check_ses_inequalities(const Graph& g, Edge e, uint32_t p) {
    auto [i, j] = make_edge(e.first, e.second);
    if (!g.has_edge(i, j)) throw std::domain_error("check_ses_inequalities: e not in E(G)");
    json w{{"edge", {i, j}}};
    if (g.edge_count() == 1)
        return make_result("ses", g, Verdict::Report,
                           json{{"skipped", "G minus e is edgeless; reg convention case"},
                                {"edge", {i, j}}});

    Graph del = g.delete_edges({{i, j}});
    Ideal Jg = binomial_edge_ideal(g, p);
    Ideal Jdel = binomial_edge_ideal(del, p);
    Ideal colon = colon_generators(g, {i, j}, p);

    Ideal elim = ideal_colon(Jdel, edge_binomial(Jg.ring(), i, j));
    if (!ideal_equal(colon, elim)) {
        json fw = w;
        fw["mismatch"] = "combinatorial colon disagrees with elimination colon";
        fw["graph6"] = emit_graph6(g);
        fw["colon_combinatorial"] = gb_strings(colon);
        fw["colon_elimination"] = gb_strings(elim);
        return make_result("ses", g, Verdict::Fail, fw);
    }

    int rg = regularity(Jg);
    int rdel = del.edge_count() == 0 ? 0 : regularity(Jdel);
    int rcol = regularity(colon);
    w["reg_G"] = rg;
    w["reg_del"] = rdel;
    w["reg_colon"] = rcol;

    bool a = rg <= std::max(rdel, rcol + 1);
    bool b = rdel <= std::max(rg, rcol + 2);
    bool c = rcol + 2 <= std::max(rdel, rg + 1);
    if (del.edge_count() == 0) {
        // reg(J_{G\e}) is a convention here, not a theorem instance
        w["skipped"] = "G minus e edgeless";
        return make_result("ses", g, Verdict::Report, w);
    }
    if (a && b && c) return make_result("ses", g, Verdict::Pass, w);
    w["a"] = a;
    w["b"] = b;
    w["c"] = c;
    w["del_groebner"] = gb_strings(Jdel);
    w["del_betti"] = betti_json(betti_table(Jdel));
    w["colon_groebner"] = gb_strings(colon);
    w["colon_betti"] = betti_json(betti_table(colon));
    return make_result("ses", g, Verdict::Fail, fail_witness(g, p, w));
}

CheckResult check_colon_lemma(const Graph& g, int v, Edge e, uint32_t p) {
    auto [i, j] = make_edge(e.first, e.second);
    if (!g.has_edge(i, j)) throw std::domain_error("check_colon_lemma: e not in E(G)");
    if (v != i && v != j) throw std::domain_error("check_colon_lemma: e must be incident to v");
    if (!g.is_simplicial(v) || g.degree(v) < 2)
        throw std::domain_error("check_colon_lemma: v must be simplicial of degree >= 2");

    int w = v == i ? j : i;
    RingContext ring = graph_ring(g, p);
    int n = g.vertex_count();

    // I_G must equal (x_u, y_u : u a neighbor of v other than w)
    PathMonomialSystem sys = path_monomial_system(g, {i, j}, ring);
    std::vector<Polynomial> path_gens = sys.monomials;
    std::vector<Polynomial> var_gens;
    for (int u : g.neighbors(v)) {
        if (u == w) continue;
        var_gens.push_back(Polynomial::term(Monomial::variable(ring.nvars(), ring.x_index(u)), 1));
        var_gens.push_back(Polynomial::term(Monomial::variable(ring.nvars(), ring.y_index(u)), 1));
    }
    bool identity = ideal_equal(Ideal(ring, path_gens), Ideal(ring, var_gens));

    Ideal colon = colon_generators(g, {i, j}, p);
    int rcol = colon.is_zero_ideal() ? 0 : regularity(colon);

    json witness{{"v", v}, {"edge", {i, j}}, {"reg_colon", rcol}, {"bound", n - 2},
                 {"identity", identity}};
    if (identity && rcol <= n - 2)
        return make_result("colon_lemma", g, Verdict::Pass, witness);
    return make_result("colon_lemma", g, Verdict::Fail, fail_witness(g, p, witness));
}

CheckResult check_decomposition(const Graph& g, uint32_t p) {
    Ideal J = binomial_edge_ideal(g, p);
    auto primes = minimal_primes(g, p);
    json w{{"components", primes.size()}};
    if (primes.empty()) return make_result("decomposition", g, Verdict::Fail, w);

    Ideal meet = primes[0].ideal;
    for (size_t k = 1; k < primes.size(); ++k) meet = ideal_intersection(meet, primes[k].ideal);

    if (ideal_equal(J, meet)) return make_result("decomposition", g, Verdict::Pass, w);
    w["graph6"] = emit_graph6(g);
    w["J_groebner"] = gb_strings(J);
    w["meet_groebner"] = gb_strings(meet);
    return make_result("decomposition", g, Verdict::Fail, w);
}

CheckResult check_height_formula(const Graph& g, uint32_t p) {
    int n = g.vertex_count();
    json fails = json::array();
    for (const auto& pc : minimal_primes(g, p)) {
        if (pc.ideal.is_zero_ideal()) continue; // edgeless graph, T empty
        int h = height_of(pc.ideal);
        int expected = n + (int)pc.t.size() - (int)pc.components.size();
        if (h != expected)
            fails.push_back(json{{"T", pc.t}, {"height", h}, {"expected", expected}});
    }
    if (fails.empty()) return make_result("height", g, Verdict::Pass, json());
    return make_result("height", g, Verdict::Fail,
                       json{{"graph6", emit_graph6(g)}, {"violations", fails}});
}

CheckResult check_dim_agreement(const Graph& g, uint32_t p) {
    int comb = combinatorial_dim(g);
    Ideal J = binomial_edge_ideal(g, p);
    int dim = krull_dim(J);
    json w{{"combinatorial", comb}, {"krull", dim}};
    if (comb == dim) return make_result("dim", g, Verdict::Pass, w);
    w["graph6"] = emit_graph6(g);
    w["groebner"] = gb_strings(J);
    return make_result("dim", g, Verdict::Fail, w);
}

CheckResult check_join_reg(const Graph& g1, const Graph& g2, uint32_t p) {
    Graph gj = join(g1, g2);
    int rj = graph_regularity(gj, p);
    json w{{"n1", g1.vertex_count()}, {"n2", g2.vertex_count()}, {"reg_join", rj}};
    if (g1.is_complete() && g2.is_complete()) {
        w["both_complete"] = true;
        if (rj == 2) return make_result("join_reg", gj, Verdict::Pass, w);
        return make_result("join_reg", gj, Verdict::Fail, fail_witness(gj, p, w));
    }
    int r1 = graph_regularity(g1, p);
    int r2 = graph_regularity(g2, p);
    int expected = predicted_join_regularity(r1, r2);
    w["reg1"] = r1;
    w["reg2"] = r2;
    w["expected"] = expected;
    if (rj == expected) return make_result("join_reg", gj, Verdict::Pass, w);
    return make_result("join_reg", gj, Verdict::Fail, fail_witness(gj, p, w));
}

CheckResult check_join_cutsets(const Graph& g1, const Graph& g2) {
    Graph gj = join(g1, g2);
    CutSetFamily formula = join_cutsets(g1, g2);
    CutSetFamily enumerated = cut_sets(gj);
    json w{{"formula_size", formula.sets.size()}, {"enumerated_size", enumerated.sets.size()}};
    if (formula == enumerated) return make_result("join_cutsets", gj, Verdict::Pass, w);
    json fs = json::array(), es = json::array();
    for (const auto& s : formula.sets) fs.push_back(s);
    for (const auto& s : enumerated.sets) es.push_back(s);
    w["formula"] = fs;
    w["enumerated"] = es;
    w["graph6"] = emit_graph6(gj);
    return make_result("join_cutsets", gj, Verdict::Fail, w);
}

CheckResult check_multipartite(const std::vector<int>& sizes, uint32_t p) {
    if (sizes.size() < 2) throw std::domain_error("check_multipartite: need at least two parts");
    bool noncomplete = false;
    for (int s : sizes)
        if (s >= 2) noncomplete = true;
    if (!noncomplete)
        throw std::domain_error("check_multipartite: all parts of size one give a complete graph");
    Graph g = complete_multipartite(sizes);
    int reg = graph_regularity(g, p);
    json w{{"sizes", sizes}, {"reg", reg}};
    if (reg == 3) return make_result("multipartite", g, Verdict::Pass, w);
    return make_result("multipartite", g, Verdict::Fail, fail_witness(g, p, w));
}

CheckResult check_clique_multiplicativity(const Graph& g1, const Graph& g2) {
    Graph gj = join(g1, g2);
    long c1 = g1.clique_count(), c2 = g2.clique_count(), cj = gj.clique_count();
    json w{{"c1", c1}, {"c2", c2}, {"c_join", cj}};
    if (cj == c1 * c2) return make_result("clique_mult", gj, Verdict::Pass, w);
    w["graph6"] = emit_graph6(gj);
    return make_result("clique_mult", gj, Verdict::Fail, w);
}

Graph graph_from_canonical(const std::vector<uint8_t>& key) {
    if (key.empty()) throw std::invalid_argument("graph_from_canonical: empty key");
    int n = key[0];
    std::vector<Edge> edges;
    size_t bit = 0;
    auto next_bit = [&]() -> int {
        size_t byte = 1 + bit / 8;
        int b = (key.at(byte) >> (7 - bit % 8)) & 1;
        ++bit;
        return b;
    };
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < k; ++i)
            if (next_bit()) edges.push_back({i + 1, k + 1});
    return Graph(n, edges);
}

std::vector<Graph> enumerate_graph_classes(int n, int ceiling) {
    if (n < 1) throw std::domain_error("enumerate_graph_classes: n must be positive");
    if (n > ceiling) throw CapacityError("enumerate_graph_classes: n exceeds the census ceiling");
    int npairs = n * (n - 1) / 2;
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});

    std::set<std::vector<uint8_t>> seen;
    for (uint64_t mask = 0; mask < (1ull << npairs); ++mask) {
        std::vector<Edge> edges;
        for (int b = 0; b < npairs; ++b)
            if ((mask >> b) & 1) edges.push_back(pairs[(size_t)b]);
        seen.insert(canonical_form(Graph(n, edges), ceiling));
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (const auto& key : seen) out.push_back(graph_from_canonical(key));
    return out;
}

const std::vector<std::string>& census_check_names() {
    static const std::vector<std::string> names = {
        "mm_bound", "lower_bound", "conjecture_a", "conjecture_b", "ses",
        "colon_theorem", "colon_lemma", "decomposition", "dim", "height"};
    return names;
}

namespace {

CensusRecord census_one(const Graph& g, const std::vector<std::string>& checks,
                        const CensusOptions& opt) {
    CensusRecord rec;
    rec.key = to_hex(canonical_form(g, opt.census_ceiling));
    rec.n = g.vertex_count();
    rec.c = g.clique_count();
    rec.l = g.longest_induced_path_length();
    rec.is_path = g.is_path();
    rec.graph6 = emit_graph6(g);

    bool want_reg = false;
    for (const auto& c : checks)
        if (c == "mm_bound" || c == "lower_bound" || c == "conjecture_a" || c == "conjecture_b" ||
            c == "ses" || c == "colon_lemma")
            want_reg = true;

    std::optional<int> reg;
    if (g.edge_count() == 0) {
        rec.reg = 0;
        reg = 0;
    } else if (want_reg && rec.n <= opt.resolution_ceiling) {
        rec.reg = graph_regularity(g, opt.characteristic, opt.cache, &rec.betti);
        rec.has_betti = true;
        reg = rec.reg;
    }

    auto capacity_skip = [&](const std::string& name, int ceiling) {
        rec.verdicts.push_back(CheckResult{
            name, rec.key, Verdict::Report,
            json{{"skipped", "n exceeds ceiling " + std::to_string(ceiling) + " for this check"}}});
    };

    for (const auto& name : checks) {
        if (name == "mm_bound" || name == "lower_bound" || name == "conjecture_a" ||
            name == "conjecture_b") {
            if (rec.n > opt.resolution_ceiling) { capacity_skip(name, opt.resolution_ceiling); continue; }
            if (name == "mm_bound")
                rec.verdicts.push_back(check_mm_bound(g, opt.characteristic, reg));
            else if (name == "lower_bound")
                rec.verdicts.push_back(check_lower_bound(g, opt.characteristic, reg));
            else if (name == "conjecture_a")
                rec.verdicts.push_back(check_conjecture_a(g, opt.characteristic, reg));
            else
                rec.verdicts.push_back(check_conjecture_b(g, opt.characteristic, reg));
        } else if (name == "ses") {
            if (rec.n > opt.elimination_ceiling) { capacity_skip(name, opt.elimination_ceiling); continue; }
            for (const auto& e : g.edges())
                rec.verdicts.push_back(check_ses_inequalities(g, e, opt.characteristic));
        } else if (name == "colon_theorem") {
            if (rec.n > opt.elimination_ceiling) { capacity_skip(name, opt.elimination_ceiling); continue; }
            for (const auto& e : g.edges()) {
                bool ok = colon_theorem_check(g, e, opt.characteristic);
                json w{{"edge", {e.first, e.second}}};
                if (!ok) w["graph6"] = rec.graph6;
                rec.verdicts.push_back(
                    CheckResult{"colon_theorem", rec.key, ok ? Verdict::Pass : Verdict::Fail, w});
            }
        } else if (name == "colon_lemma") {
            if (rec.n > opt.resolution_ceiling) { capacity_skip(name, opt.resolution_ceiling); continue; }
            for (int v = 1; v <= rec.n; ++v) {
                if (!g.is_simplicial(v) || g.degree(v) < 2) continue;
                for (int u : g.neighbors(v))
                    rec.verdicts.push_back(
                        check_colon_lemma(g, v, make_edge(v, u), opt.characteristic));
            }
        } else if (name == "decomposition") {
            if (rec.n > opt.elimination_ceiling) { capacity_skip(name, opt.elimination_ceiling); continue; }
            rec.verdicts.push_back(check_decomposition(g, opt.characteristic));
        } else if (name == "dim") {
            if (rec.n > opt.resolution_ceiling) { capacity_skip(name, opt.resolution_ceiling); continue; }
            rec.verdicts.push_back(check_dim_agreement(g, opt.characteristic));
        } else if (name == "height") {
            if (rec.n > opt.resolution_ceiling) { capacity_skip(name, opt.resolution_ceiling); continue; }
            rec.verdicts.push_back(check_height_formula(g, opt.characteristic));
        } else {
            throw std::invalid_argument("run_census: unknown check '" + name + "'");
        }
    }
    return rec;
}

} // namespace

std::vector<CensusRecord> run_census(int n_max, const std::vector<std::string>& checks,
                                     const CensusOptions& options) {
    if (n_max < 1) throw std::domain_error("run_census: n_max must be positive");
    if (n_max > options.census_ceiling) throw CapacityError("run_census: n_max exceeds the ceiling");
    for (const auto& c : checks) {
        const auto& known = census_check_names();
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw std::invalid_argument("run_census: unknown check '" + c + "'");
    }

    std::vector<Graph> all;
    for (int n = 1; n <= n_max; ++n) {
        auto classes = enumerate_graph_classes(n, options.census_ceiling);
        all.insert(all.end(), classes.begin(), classes.end());
    }

    std::vector<CensusRecord> records(all.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < all.size(); ++i) records[i] = census_one(all[i], checks, options);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors((size_t)jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (;;) {
                        size_t i = next.fetch_add(1);
                        if (i >= all.size()) break;
                        records[i] = census_one(all[i], checks, options);
                    }
                } catch (...) {
                    errors[(size_t)w] = std::current_exception();
                }
            });
        }
        for (auto& t : workers) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return records;
}

} // namespace bei
