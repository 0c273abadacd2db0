#include "bei/edge_ideal.hpp"

#include <algorithm>
#include <bit>

namespace bei {

RingContext graph_ring(const Graph& g, uint32_t characteristic) {
    return RingContext(g.vertex_count(), characteristic, 0);
}

Polynomial edge_binomial(const RingContext& ring, int i, int j) {
    if (i == j) throw std::domain_error("edge_binomial: equal endpoints");
    if (i > j) std::swap(i, j);
    int nv = ring.nvars();
    Monomial a(nv), b(nv);
    a.set_exp(ring.x_index(i), 1);
    a.set_exp(ring.y_index(j), 1);
    b.set_exp(ring.x_index(j), 1);
    b.set_exp(ring.y_index(i), 1);
    Polynomial p({Term{a, 1}, Term{b, ring.characteristic - 1}});
    MonomialOrder ord = ring.degrevlex();
    p.normalize(ring.field(), ord);
    return p;
}

Ideal binomial_edge_ideal(const Graph& g, uint32_t characteristic) {
    RingContext ring = graph_ring(g, characteristic);
    std::vector<Polynomial> gens;
    for (const auto& [u, v] : g.edges()) gens.push_back(edge_binomial(ring, u, v));
    return Ideal(ring, std::move(gens));
}

PrimeComponent prime_component(const Graph& g, const VertexSet& t, uint32_t characteristic) {
    RingContext ring = graph_ring(g, characteristic);
    VertexSet ts = t;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    VertexSet rest;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!std::binary_search(ts.begin(), ts.end(), v)) rest.push_back(v);

    std::vector<int> labels;
    Graph induced = g.induced_subgraph(rest, &labels);
    std::vector<VertexSet> comps;
    for (const auto& c : induced.connected_components()) {
        VertexSet orig;
        for (int v : c) orig.push_back(labels[(size_t)(v - 1)]);
        std::sort(orig.begin(), orig.end());
        comps.push_back(std::move(orig));
    }
    std::sort(comps.begin(), comps.end());

    std::vector<Polynomial> gens;
    for (int v : ts) {
        gens.push_back(Polynomial::term(Monomial::variable(ring.nvars(), ring.x_index(v)), 1));
        gens.push_back(Polynomial::term(Monomial::variable(ring.nvars(), ring.y_index(v)), 1));
    }
    for (const auto& c : comps)
        for (size_t a = 0; a < c.size(); ++a)
            for (size_t b = a + 1; b < c.size(); ++b)
                gens.push_back(edge_binomial(ring, c[a], c[b]));

    return PrimeComponent{ts, std::move(comps), Ideal(ring, std::move(gens))};
}

bool CutSetFamily::contains(const VertexSet& s) const {
    for (const auto& x : sets)
        if (x == s) return true;
    return false;
}

namespace {

void sort_family(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

} // namespace

CutSetFamily cut_sets(const Graph& g, int ceiling) {
    int n = g.vertex_count();
    if (n > ceiling) throw CapacityError("cut_sets: graph exceeds the census ceiling");
    CutSetFamily fam;
    fam.sets.push_back({});
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!((mask >> i) & 1)) continue;
            // i must be a cut point of the induced graph on ([n] \ T) + {i}
            VertexSet w;
            for (int v = 0; v < n; ++v)
                if (!((mask >> v) & 1) || v == i) w.push_back(v + 1);
            std::vector<int> labels;
            Graph h = g.induced_subgraph(w, &labels);
            int local = 0;
            for (size_t k = 0; k < labels.size(); ++k)
                if (labels[k] == i + 1) local = (int)k + 1;
            if (!h.is_cut_point(local)) ok = false;
        }
        if (!ok) continue;
        VertexSet t;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) t.push_back(v + 1);
        fam.sets.push_back(std::move(t));
    }
    sort_family(fam.sets);
    return fam;
}

std::vector<PrimeComponent> minimal_primes(const Graph& g, uint32_t characteristic, int ceiling) {
    std::vector<PrimeComponent> out;
    for (const auto& t : cut_sets(g, ceiling).sets) out.push_back(prime_component(g, t, characteristic));
    return out;
}

int combinatorial_dim(const Graph& g, int ceiling) {
    int n = g.vertex_count();
    if (n < 1) throw std::domain_error("combinatorial_dim: empty graph");
    if (n > ceiling) throw CapacityError("combinatorial_dim: graph exceeds the census ceiling");
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1)) rest.push_back(v + 1);
        int c = (int)g.induced_subgraph(rest).connected_components().size();
        best = std::max(best, n - std::popcount(mask) + c);
    }
    return best;
}

namespace {

void enumerate_paths(const Graph& g, int from, int target, std::vector<int>& stack,
                     std::vector<bool>& visited, std::vector<std::vector<int>>& out) {
    for (int w : g.neighbors(from)) {
        if (w == target) {
            if (!stack.empty()) out.push_back(stack); // intermediates only; skip the bare edge
            continue;
        }
        if (visited[(size_t)w]) continue;
        visited[(size_t)w] = true;
        stack.push_back(w);
        enumerate_paths(g, w, target, stack, visited, out);
        stack.pop_back();
        visited[(size_t)w] = false;
    }
}

} // namespace

PathMonomialSystem path_monomial_system(const Graph& g, Edge e, const RingContext& ring) {
    auto [i, j] = make_edge(e.first, e.second);
    PathMonomialSystem sys;
    std::vector<int> stack;
    std::vector<bool> visited((size_t)g.vertex_count() + 1, false);
    visited[(size_t)i] = true;
    visited[(size_t)j] = true;
    enumerate_paths(g, i, j, stack, visited, sys.paths);
    std::sort(sys.paths.begin(), sys.paths.end());

    for (const auto& p : sys.paths) {
        int s = (int)p.size();
        for (int t = 0; t <= s; ++t) {
            Monomial m(ring.nvars());
            for (int k = 0; k < s; ++k) {
                int idx = k < t ? ring.y_index(p[(size_t)k]) : ring.x_index(p[(size_t)k]);
                m.set_exp(idx, m.exp(idx) + 1);
            }
            sys.monomials.push_back(Polynomial::term(m, 1));
        }
    }
    return sys;
}

Ideal colon_generators(const Graph& g, Edge e, uint32_t characteristic) {
    auto [i, j] = make_edge(e.first, e.second);
    if (!g.has_edge(i, j)) throw std::domain_error("colon_generators: e is not an edge of G");
    RingContext ring = graph_ring(g, characteristic);

    Graph del = g.delete_edges({{i, j}});
    Graph completed = del.edge_completion({i, j});

    std::vector<Polynomial> gens;
    for (const auto& [u, v] : completed.edges()) gens.push_back(edge_binomial(ring, u, v));
    PathMonomialSystem sys = path_monomial_system(g, {i, j}, ring);
    for (const auto& m : sys.monomials) gens.push_back(m);
    return Ideal(ring, std::move(gens));
}

bool colon_theorem_check(const Graph& g, Edge e, uint32_t characteristic) {
    auto [i, j] = make_edge(e.first, e.second);
    if (!g.has_edge(i, j)) throw std::domain_error("colon_theorem_check: e is not an edge of G");
    Graph del = g.delete_edges({{i, j}});
    Ideal lhs = ideal_colon(binomial_edge_ideal(del, characteristic),
                            edge_binomial(graph_ring(g, characteristic), i, j));
    Ideal rhs = colon_generators(g, e, characteristic);
    return ideal_equal(lhs, rhs);
}

CutSetFamily join_cutsets(const Graph& g1, const Graph& g2, int ceiling) {
    if (g1.vertex_count() + g2.vertex_count() > ceiling)
        throw CapacityError("join_cutsets: joint size exceeds the census ceiling");
    auto comps1 = g1.connected_components();
    auto comps2 = g2.connected_components();
    if (comps1.size() < 2 || comps2.size() < 2)
        throw std::domain_error("join_cutsets: both factors must be disconnected");

    int n1 = g1.vertex_count();

    // all unions picking one member of C per component, labels shifted as given
    auto family_product = [&](const Graph& g, const std::vector<VertexSet>& comps,
                              int shift) -> std::vector<VertexSet> {
        std::vector<VertexSet> acc = {VertexSet{}};
        for (const auto& comp : comps) {
            std::vector<int> labels;
            Graph h = g.induced_subgraph(comp, &labels);
            CutSetFamily ch = cut_sets(h, ceiling);
            std::vector<VertexSet> next;
            for (const auto& base : acc) {
                for (const auto& t : ch.sets) {
                    VertexSet u = base;
                    for (int v : t) u.push_back(labels[(size_t)(v - 1)] + shift);
                    std::sort(u.begin(), u.end());
                    next.push_back(std::move(u));
                }
            }
            acc = std::move(next);
        }
        return acc;
    };

    VertexSet side1, side2;
    for (int v = 1; v <= n1; ++v) side1.push_back(v);
    for (int v = 1; v <= g2.vertex_count(); ++v) side2.push_back(v + n1);

    CutSetFamily fam;
    fam.sets.push_back({});
    for (auto& t : family_product(g1, comps1, 0)) {
        VertexSet u = t;
        u.insert(u.end(), side2.begin(), side2.end());
        std::sort(u.begin(), u.end());
        fam.sets.push_back(std::move(u));
    }
    for (auto& t : family_product(g2, comps2, n1)) {
        VertexSet u = t;
        u.insert(u.end(), side1.begin(), side1.end());
        std::sort(u.begin(), u.end());
        fam.sets.push_back(std::move(u));
    }
    sort_family(fam.sets);
    return fam;
}

int predicted_join_regularity(int r1, int r2) {
    return std::max(std::max(r1, r2), 3);
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::domain_error("complete_multipartite: no parts");
    for (int s : sizes)
        if (s < 1) throw std::domain_error("complete_multipartite: part sizes must be positive");
    Graph g(sizes[0]);
    for (size_t k = 1; k < sizes.size(); ++k) g = join(g, Graph(sizes[(size_t)k]));
    return g;
}

} // namespace bei
