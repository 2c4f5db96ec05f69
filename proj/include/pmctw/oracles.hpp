#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pmctw/graph.hpp"

namespace pmctw::oracle {

// Brute-force ground truth. Everything here scans its whole search space
// and shares nothing with the fast paths beyond graph-core primitives.

class LimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kTreewidthLimit = 20;
inline constexpr int kFamilyLimit = 14;
inline constexpr int kOrderingLimit = 9;

struct Report {
  std::string quantity;
  std::variant<long long, std::vector<VertexSet>> value;
  std::string method;
  int n_limit = 0;
};

/// Subset DP over elimination prefixes:
///   best(∅) = -1,  best(S) = min over v ∈ S of max(best(S \ {v}), |Q(S \ {v}, v)|)
/// where Q(L, v) is the set of vertices outside L ∪ {v} reachable from v
/// through L. n <= kTreewidthLimit.
int treewidth(const Graph& g);

/// Width of the best elimination ordering found by trying all n!
/// orderings with explicit fill-in. n <= kOrderingLimit.
int treewidth_by_orderings(const Graph& g);

/// Every S ⊆ V with at least two full components. n <= kFamilyLimit.
std::vector<VertexSet> minimal_separators(const Graph& g);

/// Literal two-condition check for potential maximal cliques: no full
/// component, and G[K] plus completed component neighborhoods is complete.
bool is_pmc_literal(const Graph& g, const VertexSet& k);

/// Every nonempty K ⊆ V passing is_pmc_literal. n <= kFamilyLimit.
std::vector<VertexSet> pmcs(const Graph& g);

/// Whether Ω stops being a clique once every minimal separator of g inside
/// Ω other than S is completed; `all_separators` is the full family of g.
bool is_active_literal(const Graph& g, const VertexSet& omega, const VertexSet& s,
                       const std::vector<VertexSet>& all_separators);

/// PMCs with at least one active separator. n <= kFamilyLimit.
std::vector<VertexSet> nice_pmcs(const Graph& g);

/// Connected B with v ∈ B, |B| = b+1, |N(B)| = f. n <= kFamilyLimit.
std::vector<VertexSet> connected_sets(const Graph& g, int v, int b, int f);

/// Every nonempty connected B ⊆ V, sorted. n <= kFamilyLimit.
std::vector<VertexSet> all_connected_sets(const Graph& g);

/// Minimum width over decompositions where clique K is a leaf bag, by trying
/// every ordering of V \ K followed by K. |V \ K| <= kOrderingLimit.
int leaf_bag_width(const Graph& g, const VertexSet& k);

Report treewidth_report(const Graph& g);
Report separators_report(const Graph& g);
Report pmcs_report(const Graph& g);
Report connected_report(const Graph& g, int v, int b, int f);

}  // namespace pmctw::oracle
