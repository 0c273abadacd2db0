#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bei/ring.hpp"

namespace bei {

inline constexpr int kCensusCeiling = 8;

using VertexSet = std::vector<int>; // sorted 1-based labels
using Edge = std::pair<int, int>;   // normalized u < v

Edge make_edge(int u, int v);

/// Labeled simple graph on vertex set {1..n}, stored as adjacency bit rows.
/// Values are immutable after construction; all operations return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;
    int degree(int v) const;

    VertexSet neighbors(int v) const;
    bool is_simplicial(int v) const;
    bool is_cut_point(int v) const;

    /// Induced subgraph on w, relabeled 1..|w| order-preservingly. When
    /// original_labels is given it receives the label of each new vertex.
    Graph induced_subgraph(const VertexSet& w, std::vector<int>* original_labels = nullptr) const;

    Graph delete_edges(const std::vector<Edge>& f) const;
    Graph add_edge(Edge e) const;

    /// G_e: all pairs inside N(v) and all pairs inside N(w) become edges,
    /// for e = {v,w}. e need not be an edge of the graph.
    Graph edge_completion(Edge e) const;

    std::vector<VertexSet> connected_components() const;
    bool is_connected() const;
    bool is_complete() const;

    int alpha(int v) const;     // C(deg v, 2) minus edges among the neighbors of v
    int alpha_min() const;      // min over all vertices; 0 iff a simplicial vertex exists
    long clique_count() const;  // number of maximal cliques (Bron-Kerbosch)
    int longest_induced_path_length() const; // edges of the longest induced path
    bool is_path() const;       // connected path on all n vertices; K_1 counts

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // internal 0-based adjacency mask, exposed for the census machinery
    uint32_t adjacency_mask(int v0) const { return adj_[(size_t)v0]; }

private:
    void check_vertex(int v) const;
    int components_of_mask(uint32_t mask) const;

    int n_ = 0;
    std::vector<uint32_t> adj_;
};

/// Join product: disjoint union plus all edges between the two sides; the
/// second factor is relabeled to m+1..m+n.
Graph join(const Graph& g, const Graph& h);

/// Label-invariant key: the minimal adjacency bitstring over all vertex
/// permutations that sort degrees descending, with branch-and-bound pruning.
/// Equal for isomorphic graphs, distinct otherwise. Byte 0 is n.
std::vector<uint8_t> canonical_form(const Graph& g, int ceiling = kCensusCeiling);

std::string to_hex(const std::vector<uint8_t>& bytes);

} // namespace bei
