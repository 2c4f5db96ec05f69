#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmctw/graph.hpp"

namespace pmctw {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  /// Tree edges as pairs of bag indices.
  std::vector<std::pair<int, int>> edges;

  /// Max bag size minus one; -1 when there are no bags.
  int width() const;
};

/// Describes the first violated decomposition axiom, or std::nullopt when
/// `td` is a valid tree decomposition of g.
std::optional<std::string> check_decomposition(const Graph& g, const TreeDecomposition& td);

inline bool validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  return !check_decomposition(g, td).has_value();
}

/// H is a triangulation of g witnessing `claimed_width`: H is chordal,
/// contains every edge of g, and its clique number minus one equals the claim.
std::optional<std::string> check_triangulation(const Graph& g, std::span<const Edge> h_edges,
                                               int claimed_width);

inline bool validate_triangulation(const Graph& g, std::span<const Edge> h_edges, int claimed_width) {
  return !check_triangulation(g, h_edges, claimed_width).has_value();
}

/// Completes every bag into a clique and returns the resulting edge list
/// (sorted, u < v).
std::vector<Edge> triangulation_from_bags(const Graph& g, const TreeDecomposition& td);

}  // namespace pmctw
