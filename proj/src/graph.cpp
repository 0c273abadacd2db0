#include "bei/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bei {

namespace {
constexpr int kStructuralMax = 31; // adjacency rows are uint32 bitmasks

int popcount(uint32_t x) { return std::popcount(x); }
} // namespace

Edge make_edge(int u, int v) {
    if (u == v) throw std::domain_error("edge endpoints must be distinct");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n) : n_(n), adj_((size_t)std::max(n, 0), 0u) {
    if (n < 0) throw std::domain_error("Graph: negative vertex count");
    if (n > kStructuralMax) throw CapacityError("Graph: vertex count exceeds structural limit");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) {
        if (u == v) throw std::domain_error("Graph: self-loop");
        check_vertex(u);
        check_vertex(v);
        if (has_edge(u, v)) throw std::domain_error("Graph: duplicate edge");
        adj_[(size_t)(u - 1)] |= 1u << (v - 1);
        adj_[(size_t)(v - 1)] |= 1u << (u - 1);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::domain_error("Graph: vertex label out of range");
}

int Graph::edge_count() const {
    int s = 0;
    for (uint32_t row : adj_) s += popcount(row);
    return s / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[(size_t)(u - 1)] >> (v - 1)) & 1u;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if ((adj_[(size_t)(u - 1)] >> (v - 1)) & 1u) out.push_back({u, v});
    return out;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return popcount(adj_[(size_t)(v - 1)]);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    VertexSet out;
    uint32_t row = adj_[(size_t)(v - 1)];
    while (row) {
        int b = std::countr_zero(row);
        out.push_back(b + 1);
        row &= row - 1;
    }
    return out;
}

bool Graph::is_simplicial(int v) const {
    check_vertex(v);
    uint32_t nb = adj_[(size_t)(v - 1)];
    // the neighborhood must induce a complete graph; empty neighborhoods count
    for (uint32_t rest = nb; rest;) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        if ((adj_[(size_t)b] & nb) != (nb & ~(1u << b))) return false;
    }
    return true;
}

int Graph::components_of_mask(uint32_t mask) const {
    int count = 0;
    uint32_t todo = mask;
    while (todo) {
        ++count;
        uint32_t comp = todo & (~todo + 1); // lowest set bit seeds a BFS
        for (;;) {
            uint32_t grown = comp;
            uint32_t scan = comp;
            while (scan) {
                int b = std::countr_zero(scan);
                scan &= scan - 1;
                grown |= adj_[(size_t)b] & mask;
            }
            if (grown == comp) break;
            comp = grown;
        }
        todo &= ~comp;
    }
    return count;
}

bool Graph::is_cut_point(int v) const {
    check_vertex(v);
    uint32_t full = n_ == 0 ? 0 : (n_ == 32 ? ~0u : (1u << n_) - 1);
    uint32_t without = full & ~(1u << (v - 1));
    return components_of_mask(without) > components_of_mask(full);
}

Graph Graph::induced_subgraph(const VertexSet& w, std::vector<int>* original_labels) const {
    VertexSet sorted = w;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) check_vertex(v);
    Graph g((int)sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (has_edge(sorted[i], sorted[j])) {
                g.adj_[i] |= 1u << j;
                g.adj_[j] |= 1u << i;
            }
    if (original_labels) *original_labels = sorted;
    return g;
}

Graph Graph::delete_edges(const std::vector<Edge>& f) const {
    Graph g = *this;
    for (const auto& [u, v] : f) {
        if (!has_edge(u, v)) throw std::domain_error("delete_edges: edge not present");
        g.adj_[(size_t)(u - 1)] &= ~(1u << (v - 1));
        g.adj_[(size_t)(v - 1)] &= ~(1u << (u - 1));
    }
    return g;
}

Graph Graph::add_edge(Edge e) const {
    auto [u, v] = make_edge(e.first, e.second);
    check_vertex(u);
    check_vertex(v);
    if (has_edge(u, v)) throw std::domain_error("add_edge: edge already present");
    Graph g = *this;
    g.adj_[(size_t)(u - 1)] |= 1u << (v - 1);
    g.adj_[(size_t)(v - 1)] |= 1u << (u - 1);
    return g;
}

Graph Graph::edge_completion(Edge e) const {
    auto [v, w] = make_edge(e.first, e.second);
    check_vertex(v);
    check_vertex(w);
    Graph g = *this;
    for (uint32_t nb : {adj_[(size_t)(v - 1)], adj_[(size_t)(w - 1)]}) {
        uint32_t scan = nb;
        while (scan) {
            int b = std::countr_zero(scan);
            scan &= scan - 1;
            g.adj_[(size_t)b] |= nb & ~(1u << b);
        }
    }
    return g;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> out;
    uint32_t full = n_ == 0 ? 0 : (1u << n_) - 1;
    uint32_t todo = full;
    while (todo) {
        uint32_t comp = todo & (~todo + 1);
        for (;;) {
            uint32_t grown = comp;
            uint32_t scan = comp;
            while (scan) {
                int b = std::countr_zero(scan);
                scan &= scan - 1;
                grown |= adj_[(size_t)b] & full;
            }
            if (grown == comp) break;
            comp = grown;
        }
        VertexSet vs;
        uint32_t scan = comp;
        while (scan) {
            int b = std::countr_zero(scan);
            scan &= scan - 1;
            vs.push_back(b + 1);
        }
        out.push_back(std::move(vs));
        todo &= ~comp;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return components_of_mask((1u << n_) - 1) == 1;
}

bool Graph::is_complete() const {
    for (int v = 1; v <= n_; ++v)
        if (degree(v) != n_ - 1) return false;
    return true;
}

int Graph::alpha(int v) const {
    check_vertex(v);
    uint32_t nb = adj_[(size_t)(v - 1)];
    int d = popcount(nb);
    int among = 0;
    uint32_t scan = nb;
    while (scan) {
        int b = std::countr_zero(scan);
        scan &= scan - 1;
        among += popcount(adj_[(size_t)b] & nb);
    }
    among /= 2;
    return d * (d - 1) / 2 - among;
}

int Graph::alpha_min() const {
    if (n_ < 1) throw std::domain_error("alpha_min: empty graph");
    int best = alpha(1);
    for (int v = 2; v <= n_; ++v) best = std::min(best, alpha(v));
    return best;
}

namespace {

void bron_kerbosch(const Graph& g, uint32_t r, uint32_t p, uint32_t x, long& count) {
    if (p == 0 && x == 0) {
        ++count;
        return;
    }
    // pivot on the vertex covering most of p
    uint32_t px = p | x;
    int pivot = -1, best = -1;
    uint32_t scan = px;
    while (scan) {
        int b = std::countr_zero(scan);
        scan &= scan - 1;
        int cover = std::popcount(p & g.adjacency_mask(b));
        if (cover > best) { best = cover; pivot = b; }
    }
    uint32_t cand = p & ~g.adjacency_mask(pivot);
    while (cand) {
        int v = std::countr_zero(cand);
        uint32_t bit = 1u << v;
        cand &= cand - 1;
        bron_kerbosch(g, r | bit, p & g.adjacency_mask(v), x & g.adjacency_mask(v), count);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

long Graph::clique_count() const {
    if (n_ == 0) return 0;
    long count = 0;
    bron_kerbosch(*this, 0, (1u << n_) - 1, 0, count);
    return count;
}

int Graph::longest_induced_path_length() const {
    if (n_ == 0) return 0;
    if (n_ > 20) throw CapacityError("longest_induced_path_length: subset enumeration limit");
    int best = 0;
    for (uint32_t mask = 1; mask < (1u << n_); ++mask) {
        int size = popcount(mask);
        if (size - 1 <= best) continue;
        // induced subgraph must be a path: connected, max degree 2, two endpoints
        int deg1 = 0;
        bool ok = true;
        uint32_t scan = mask;
        while (scan) {
            int b = std::countr_zero(scan);
            scan &= scan - 1;
            int d = popcount(adj_[(size_t)b] & mask);
            if (d > 2) { ok = false; break; }
            if (d == 1) ++deg1;
            if (d == 0 && size > 1) { ok = false; break; }
        }
        if (!ok || (size > 1 && deg1 != 2)) continue;
        if (components_of_mask(mask) != 1) continue;
        best = size - 1;
    }
    return best;
}

bool Graph::is_path() const {
    if (n_ == 0) return false;
    if (n_ == 1) return true;
    if (!is_connected()) return false;
    int deg1 = 0;
    for (int v = 1; v <= n_; ++v) {
        int d = degree(v);
        if (d > 2) return false;
        if (d == 1) ++deg1;
    }
    return deg1 == 2;
}

Graph join(const Graph& g, const Graph& h) {
    int m = g.vertex_count(), n = h.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.push_back({u + m, v + m});
    for (int u = 1; u <= m; ++u)
        for (int v = 1; v <= n; ++v)
            edges.push_back({u, m + v});
    return Graph(m + n, edges);
}

namespace {

struct CanonSearch {
    const Graph* g;
    int n;
    std::vector<int> target_deg;   // sorted descending; slot k must host this degree
    std::vector<uint32_t> best;    // best complete row sequence found so far
    std::vector<uint32_t> rows;    // current partial rows
    std::vector<int> perm;         // perm[k] = original 0-based vertex at slot k
    std::vector<bool> used;
    bool have_best = false;

    void run() {
        rows.assign((size_t)n, 0);
        perm.assign((size_t)n, -1);
        used.assign((size_t)n, false);
        dfs(0, true);
    }

    // eq: rows[0..k) coincides with best[0..k); pruning is sound only then.
    // Updates inside a subtree keep the shared prefix, so eq stays valid.
    void dfs(int k, bool eq) {
        if (k == n) {
            if (!have_best || rows < best) {
                best = rows;
                have_best = true;
            }
            return;
        }
        std::vector<std::pair<uint32_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used[(size_t)v]) continue;
            if (std::popcount(g->adjacency_mask(v)) != target_deg[(size_t)k]) continue;
            uint32_t row = 0;
            for (int i = 0; i < k; ++i)
                if ((g->adjacency_mask(v) >> perm[(size_t)i]) & 1u) row |= 1u << (k - 1 - i);
            cands.push_back({row, v});
        }
        std::sort(cands.begin(), cands.end());
        for (const auto& [row, v] : cands) {
            if (have_best && eq && row > best[(size_t)k]) break; // all later rows are larger
            rows[(size_t)k] = row;
            perm[(size_t)k] = v;
            used[(size_t)v] = true;
            dfs(k + 1, have_best && eq && row == best[(size_t)k]);
            used[(size_t)v] = false;
        }
    }
};

} // namespace

std::vector<uint8_t> canonical_form(const Graph& g, int ceiling) {
    int n = g.vertex_count();
    if (n > ceiling) throw CapacityError("canonical_form: graph exceeds census ceiling");
    CanonSearch search;
    search.g = &g;
    search.n = n;
    for (int v = 1; v <= n; ++v) search.target_deg.push_back(g.degree(v));
    std::sort(search.target_deg.rbegin(), search.target_deg.rend());
    search.run();

    std::vector<uint8_t> bytes;
    bytes.push_back((uint8_t)n);
    int bitpos = 0;
    uint8_t cur = 0;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < k; ++i) {
            int bit = (search.best[(size_t)k] >> (k - 1 - i)) & 1;
            cur = (uint8_t)((cur << 1) | bit);
            if (++bitpos == 8) {
                bytes.push_back(cur);
                cur = 0;
                bitpos = 0;
            }
        }
    }
    if (bitpos > 0) bytes.push_back((uint8_t)(cur << (8 - bitpos)));
    return bytes;
}

std::string to_hex(const std::vector<uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

} // namespace bei
