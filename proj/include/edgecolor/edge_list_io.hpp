#pragma once

#include "edgecolor/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace edgecolor {

/// Parsed edge-list file. Weighted iff every data line has a third column.
struct EdgeListFile {
    Graph graph;
    std::optional<WeightedGraph> weighted;
};

/// One edge per line: "u v" or "u v w" (w a positive decimal, parsed
/// exactly). '#' starts a comment; blank lines are ignored. Throws
/// ParseError naming the offending line.
EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const WeightedGraph& wg);

/// "u v color" per edge, canonical order.
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c);
/// Reads a coloring for `g`. Unknown edges, duplicates and missing edges are
/// ParseErrors; a missing edge is reported only when `require_complete`.
EdgeColoring read_coloring(std::istream& in, const Graph& g, bool require_complete = true);

} // namespace edgecolor
