#include "bei/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace bei {

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream ls(s);
        if (n < 0) {
            if (!(ls >> n) || n < 0) throw ParseError("edge list: expected vertex count", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("edge list: trailing tokens after vertex count", lineno);
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u >> v)) throw ParseError("edge list: expected 'i j'", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("edge list: trailing tokens after edge", lineno);
        if (u == v) throw ParseError("edge list: self-loop " + std::to_string(u), lineno);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("edge list: endpoint out of range", lineno);
        Edge e = make_edge(u, v);
        for (const auto& f : edges)
            if (f == e) throw ParseError("edge list: duplicate edge", lineno);
        edges.push_back(e);
    }
    if (n < 0) throw ParseError("edge list: empty input", 1);
    return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph parse_graph6(const std::string& text) {
    std::string s = strip(text);
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw ParseError("graph6: empty input", 1);
    size_t pos = 0;
    if (s[0] == '~') throw ParseError("graph6: extended sizes not supported", 1, 1);
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw ParseError("graph6: bad size byte", 1, 1);
    ++pos;
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if ((int)(s.size() - pos) != nbytes)
        throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                             std::to_string(s.size() - pos),
                         1, (int)pos + 1);
    std::vector<int> bits;
    bits.reserve((size_t)nbytes * 6);
    for (; pos < s.size(); ++pos) {
        int v = s[pos] - 63;
        if (v < 0 || v > 63) throw ParseError("graph6: bad data byte", 1, (int)pos + 1);
        for (int k = 5; k >= 0; --k) bits.push_back((v >> k) & 1);
    }
    std::vector<Edge> edges;
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (bits[(size_t)idx]) edges.push_back({i + 1, j + 1});
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw CapacityError("graph6: only single-byte sizes supported");
    std::string out;
    out.push_back((char)(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i + 1, j + 1) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back((char)((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_graph_input(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Graph6: return parse_graph6(text);
        case GraphFormat::Auto: break;
    }
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty graph input", 1);
    bool single_line = s.find('\n') == std::string::npos;
    bool digits_only_first = true;
    for (char c : s.substr(0, s.find_first_of(" \t\n"))) {
        if (!std::isdigit((unsigned char)c)) { digits_only_first = false; break; }
    }
    if (single_line && !digits_only_first) return parse_graph6(s);
    return parse_edge_list(text);
}

} // namespace bei
