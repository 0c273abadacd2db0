#pragma once

#include <string>

#include "bei/graph.hpp"

namespace bei {

/// Input rejected by a parser; carries a 1-based line and column when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line <= 0) return what;
        return what + " (line " + std::to_string(line) +
               (column > 0 ? ", column " + std::to_string(column) : "") + ")";
    }
    int line_;
    int column_;
};

enum class GraphFormat { EdgeList, Graph6, Auto };

/// Plain text format: first line "n", then one "i j" pair per line.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

/// Standard graph6 encoding (single-byte size, n <= 62).
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

/// Dispatch on format; Auto treats one-line inputs without digits-only first
/// token as graph6 and everything else as an edge list.
Graph parse_graph_input(const std::string& text, GraphFormat format = GraphFormat::Auto);

} // namespace bei
