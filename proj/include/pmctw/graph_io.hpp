#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pmctw/graph.hpp"
#include "pmctw/tree_decomposition.hpp"

namespace pmctw {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses a PACE `.gr` graph ("p tw n m" header, one 1-indexed edge per
/// line, "c" comment lines). Without a header the text is read as a plain
/// whitespace-separated edge list and n is the largest id seen. Duplicate
/// edges are merged; self-loops, out-of-range ids, and malformed headers
/// throw ParseError.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::string& path);

/// PACE `.gr` text for g.
std::string write_graph(const Graph& g);

/// PACE `.td` text: "s td <bags> <max bag size> <n>", then "b" lines, then
/// tree edges, all 1-indexed.
std::string write_decomposition(const TreeDecomposition& td, int n);

TreeDecomposition parse_decomposition(std::string_view text, int* n_out = nullptr);

/// One "u v" line per edge, 1-indexed.
std::string write_edge_list(std::span<const Edge> edges);

}  // namespace pmctw
