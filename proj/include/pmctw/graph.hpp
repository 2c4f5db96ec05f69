#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pmctw/vertex_set.hpp"

namespace pmctw {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) are merged; self-loops and out-of-range endpoints throw
  /// std::invalid_argument.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return n_; }
  int m() const { return m_; }

  const VertexSet& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).size(); }

  /// The full vertex set {0..n-1}.
  const VertexSet& vertices() const { return all_; }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  VertexSet all_;
  std::vector<VertexSet> adjacency_;
};

/// Result of induced_subgraph: the subgraph plus the id of each of its
/// vertices in the parent graph (to_parent[i] is the parent id of vertex i).
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;

  /// Maps a set over the subgraph's ids back to parent ids.
  VertexSet lift(const VertexSet& local) const;
};

/// G[W], relabelled to 0..|W|-1 in increasing parent-id order. Throws
/// std::invalid_argument when W is empty.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

/// G[order[0..]], where vertex i of the result is order[i].
InducedSubgraph induced_subgraph_ordered(const Graph& g, std::span<const int> order);

/// N(S): union of neighborhoods of S, minus S.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// N[S] = S ∪ N(S).
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  return s | neighborhood(g, s);
}

/// Vertices reachable from `start` inside `allowed` (start must be in allowed).
VertexSet component_of(const Graph& g, int start, const VertexSet& allowed);

/// Connected components of G[V \ forbidden], ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& forbidden);

/// Components C of G \ S with N(C) = S, ordered by smallest member.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
bool is_connected_set(const Graph& g, const VertexSet& s);

/// True when every pair of vertices of W is adjacent (vacuous for |W| <= 1).
bool is_clique(const Graph& g, const VertexSet& w);

/// Returns a perfect elimination ordering (first eliminated first) when the
/// graph is chordal, std::nullopt otherwise.
std::optional<std::vector<int>> is_chordal(const Graph& g);

/// Size of a maximum clique of a chordal graph, read off a perfect
/// elimination ordering.
int chordal_clique_number(const Graph& g, std::span<const int> peo);

/// A copy of g with every set in `cliques` completed.
Graph complete_sets(const Graph& g, std::span<const VertexSet> cliques);

}  // namespace pmctw
