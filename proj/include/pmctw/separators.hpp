#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pmctw/graph.hpp"

namespace pmctw {

/// A minimal separator S with its certificate: the full components of
/// G \ S (at least two).
struct MinimalSeparator {
  VertexSet set;
  std::vector<VertexSet> full_components;
};

/// Deduplicated minimal separators in canonical order (sorted member lists).
struct SeparatorFamily {
  std::vector<MinimalSeparator> members;
  std::optional<int> size_cap;

  std::size_t size() const { return members.size(); }
  std::vector<VertexSet> sets() const;
  bool contains(const VertexSet& s) const;

  /// Number of separators of each size.
  std::map<int, std::size_t> size_histogram() const;
};

/// The full components of S when there are at least two, std::nullopt
/// otherwise.
std::optional<MinimalSeparator> is_minimal_separator(const Graph& g, const VertexSet& s);

/// All minimal separators, by closure from the separators next to each
/// closed neighborhood: for S in the family and x in S, every component D of
/// G \ (S ∪ N(x)) contributes N(D).
SeparatorFamily list_minimal_separators(const Graph& g);

/// Minimal separators of size <= k, found as neighborhoods of connected sets
/// C with |N(C)| <= k and 2|C| + |N(C)| <= n (C is the smaller of two full
/// components), each candidate certified with is_minimal_separator.
SeparatorFamily list_minimal_separators_bounded(const Graph& g, int k);

}  // namespace pmctw
