#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pmctw/graph.hpp"
#include "pmctw/pmc.hpp"
#include "pmctw/separators.hpp"
#include "pmctw/tree_decomposition.hpp"

namespace pmctw {

/// Raised when the separator and PMC families handed to the DP cannot be
/// complete for the graph (a block has no table entry or no covering PMC).
class InconsistentFamiliesError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TreewidthSolution {
  int width = -1;
  TreeDecomposition decomposition;
  /// Edges of the triangulation obtained by completing every bag.
  std::vector<Edge> triangulation;
};

/// Treewidth of a connected graph from its complete separator and PMC
/// families, by dynamic programming over blocks (S, C) in increasing |C|:
///
///   tw(S, C) = min over Ω with S ⊂ Ω ⊆ S ∪ C of
///              max(|Ω| - 1, max over components C' of G[C \ Ω] of tw(N(C'), C'))
///
/// with the whole graph handled as min over all Ω. The decomposition has one
/// bag per chosen PMC; ties go to the canonically smallest PMC.
TreewidthSolution compute_treewidth(const Graph& g, const SeparatorFamily& separators,
                                    std::span<const PotentialMaximalClique> pmcs);

/// Same DP restricted to PMCs of size <= k+1; `separators` must contain
/// every minimal separator of size <= k. Returns a minimum-width
/// decomposition when tw(g) <= k, std::nullopt otherwise.
std::optional<TreewidthSolution> compute_treewidth_bounded(const Graph& g, const SeparatorFamily& separators,
                                                           std::span<const PotentialMaximalClique> pmcs, int k);

/// Exact treewidth of any graph (components solved separately and joined).
TreewidthSolution exact_treewidth(const Graph& g);

/// A minimum-width decomposition when tw(g) <= k, std::nullopt when tw(g) > k.
std::optional<TreewidthSolution> decide_treewidth_at_most_k(const Graph& g, int k);

/// Runs decide_treewidth_at_most_k for k = 1, 2, ... until it succeeds.
/// `attempts`, when given, receives the number of k values tried.
TreewidthSolution treewidth_by_k_scan(const Graph& g, int* attempts = nullptr);

}  // namespace pmctw
