#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmctw/graph.hpp"

namespace pmctw {

enum class BoundaryMode { exact, at_most };

/// A connected vertex set together with its open neighborhood.
struct ConnectedSetRecord {
  VertexSet set;
  VertexSet boundary;

  friend bool operator==(const ConnectedSetRecord&, const ConnectedSetRecord&) = default;
};

/// Public query shape: sets of exactly b+1 vertices with |N(B)| = f (or
/// <= f), optionally containing a given root.
struct ConnectedSetQuery {
  std::optional<int> root;
  int b = 0;
  int f = 0;
  BoundaryMode mode = BoundaryMode::exact;
};

/// Limits driving the branching search. Every limit except `viable` works
/// as an enumeration cut because it is monotone along a branch: the set
/// only grows, and so does the lower bound on its final boundary.
struct ConnectedSetLimits {
  int min_size = 1;
  int max_size = kMaxVertices;
  int max_boundary = kMaxVertices;
  /// When set, only sets with exactly this many neighbors are emitted.
  std::optional<int> exact_boundary;
  /// Upper bound on |B ∪ N(B)|.
  std::optional<int> max_closed;
  /// Vertices that may never join B (they still count toward N(B)).
  VertexSet blocked;
  /// Extra pruning hook, called with (|B|, lower bound on the final |N(B)|);
  /// returning false cuts the branch. It must be monotone in both arguments.
  std::function<bool(int, int)> viable;
};

/// Caller-pulled stream of connected sets containing a fixed root.
///
/// Branching follows the inductive count: the current set B grows by its
/// lowest-id frontier vertex u_i, and the siblings u_1..u_{i-1} tried before
/// it are excluded for the rest of that branch, so they end up in N(B).
/// Every qualifying set is reached by exactly one branch. Working memory is
/// the branch stack, at most max_size frames of four sets each.
class ConnectedSetStream {
 public:
  ConnectedSetStream(const Graph& g, int root, ConnectedSetLimits limits);
  /// The stream keeps a pointer to the graph.
  ConnectedSetStream(Graph&&, int, ConnectedSetLimits) = delete;

  std::optional<ConnectedSetRecord> next();

  /// Deepest branch stack seen so far.
  int max_depth() const { return max_depth_; }

 private:
  struct Frame {
    VertexSet set;
    VertexSet excluded;
    VertexSet frontier;
    VertexSet boundary;
  };

  void visit(const VertexSet& set, const VertexSet& excluded, const VertexSet& boundary);

  const Graph* g_;
  ConnectedSetLimits limits_;
  std::vector<Frame> stack_;
  std::optional<ConnectedSetRecord> pending_;
  int max_depth_ = 0;
};

/// Chains rooted streams over roots 0..n-1. With `distinct_by_min_root`,
/// roots smaller than the current one are blocked, so each set is emitted
/// once (from its smallest member).
class MultiRootStream {
 public:
  MultiRootStream(const Graph& g, ConnectedSetLimits limits, bool distinct_by_min_root = true);
  MultiRootStream(Graph&&, ConnectedSetLimits, bool = true) = delete;

  std::optional<ConnectedSetRecord> next();

  /// Root of the set returned by the last next() call.
  int current_root() const { return root_; }
  int max_depth() const { return max_depth_; }

 private:
  const Graph* g_;
  ConnectedSetLimits limits_;
  bool distinct_;
  int root_ = -1;
  std::optional<ConnectedSetStream> stream_;
  int max_depth_ = 0;
};

/// Connected B with v ∈ B, |B| = b+1 and |N(B)| = f (or <= f in at_most
/// mode). Infeasible parameters give an empty stream.
ConnectedSetStream enumerate_rooted(const Graph& g, int v, int b, int f,
                                    BoundaryMode mode = BoundaryMode::exact);
ConnectedSetStream enumerate_rooted(Graph&&, int, int, int, BoundaryMode = BoundaryMode::exact) = delete;

/// Every connected B with |B| <= size_budget+1 and |N(B)| <= boundary_budget,
/// each exactly once.
MultiRootStream enumerate_all(const Graph& g, int size_budget, int boundary_budget);
MultiRootStream enumerate_all(Graph&&, int, int) = delete;

/// Runs a query: rooted when query.root is set, otherwise over all roots
/// (each set once). Materializes the result.
std::vector<ConnectedSetRecord> run_query(const Graph& g, const ConnectedSetQuery& query);

template <class Stream, class F>
void drain(Stream& stream, F&& f) {
  while (auto rec = stream.next()) f(*rec);
}

using BigInt = boost::multiprecision::cpp_int;

/// C(b+f, b), exactly.
BigInt count_bound(int b, int f);

}  // namespace pmctw
