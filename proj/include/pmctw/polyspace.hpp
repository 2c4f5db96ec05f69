#pragma once

#include <functional>
#include <vector>

#include "pmctw/graph.hpp"
#include "pmctw/pmc.hpp"
#include "pmctw/tree_decomposition.hpp"

namespace pmctw {

struct PolySpaceConfig {
  /// Component-size threshold separating the two search branches, as a
  /// fraction of n.
  double alpha_split = 0.38685;
  /// Separator size cap for the second branch, as a fraction of n; always
  /// 1 - 2 * alpha_split.
  double sep_cap_fraction = 0.2263;
  /// Stop as soon as a candidate meets the degeneracy lower bound.
  bool stop_at_lower_bound = true;

  static PolySpaceConfig with_alpha(double alpha);

  /// Throws std::invalid_argument unless 0 < alpha < 1/2 and the separator
  /// cap matches 1 - 2 * alpha.
  void validate() const;
};

struct PolySpaceStats {
  long long branch_a_candidates = 0;
  long long branch_b_candidates = 0;
  long long leaf_bag_calls = 0;
  /// Deepest leaf-bag recursion (bounded by log2(n) + 1).
  int max_recursion_depth = 0;
  /// Deepest connected-set branch stack (bounded by n).
  int max_enumeration_depth = 0;
  /// Largest number of vertex sets alive at once in any single structure.
  int peak_live_sets = 0;
};

struct PolySpaceResult {
  int width = -1;
  PolySpaceStats stats;
};

/// Streams every PMC Ω for which G \ Ω has a component of at least αn
/// vertices. Each Ω is found through a vertex representation (C_u, u) with
/// |C_u ∪ N(C_u)| <= n(1 - α) and reported once, from the smallest such u.
/// Nothing beyond the current candidate is stored.
void list_pmcs_large_component(const Graph& g, double alpha, const PmcVisitor& visit,
                               PolySpaceStats* stats = nullptr);

struct LeafBagResult {
  int width = -1;
  TreeDecomposition decomposition;
};

/// Minimum width of a decomposition of g in which the clique K is a leaf
/// bag. Searches elimination orderings of V \ K (K goes last) by balanced
/// halving: the first half of the remaining vertices is chosen, both halves
/// are solved recursively, and the larger cost counts. Polynomial memory.
/// Throws std::invalid_argument if K is empty or not a clique.
LeafBagResult treewidth_leaf_bag(const Graph& g, const VertexSet& k);

/// Treewidth in polynomial space: the minimum over two candidate branches,
/// (A) PMCs whose largest component is smaller than alpha_split·n, scored
/// by completing Ω and solving each component with Ω as a leaf bag, and
/// (B) minimal separators of size <= sep_cap_fraction·n with two full
/// components of at least alpha_split·n vertices, scored the same way.
PolySpaceResult polyspace_treewidth(const Graph& g, const PolySpaceConfig& config = {});

inline int treewidth_polyspace(const Graph& g, const PolySpaceConfig& config = {}) {
  return polyspace_treewidth(g, config).width;
}

/// Largest k such that g has a subgraph of minimum degree k.
int degeneracy(const Graph& g);

}  // namespace pmctw
