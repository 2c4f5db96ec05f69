#include "pmctw/connected_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pmctw {

ConnectedSetStream::ConnectedSetStream(const Graph& g, int root, ConnectedSetLimits limits)
    : g_(&g), limits_(std::move(limits)) {
  if (root < 0 || root >= g.n()) throw std::invalid_argument("root vertex out of range");
  if (limits_.blocked.contains(root)) return;
  visit(VertexSet::singleton(root), VertexSet{}, g.neighbors(root));
}

void ConnectedSetStream::visit(const VertexSet& set, const VertexSet& excluded, const VertexSet& boundary) {
  // `excluded` is always a subset of N(set): each excluded vertex was a
  // frontier vertex of an ancestor and can never join the set afterwards.
  const int blocked_boundary = (boundary & limits_.blocked).size();
  const int boundary_lb = excluded.size() + blocked_boundary;
  const int size = set.size();
  if (boundary_lb > limits_.max_boundary) return;
  if (limits_.max_closed && size + boundary.size() > *limits_.max_closed) return;
  if (limits_.viable && !limits_.viable(size, boundary_lb)) return;
  if (size < limits_.min_size) {
    VertexSet allowed = g_->vertices() - excluded - limits_.blocked;
    if (component_of(*g_, set.front(), allowed).size() < limits_.min_size) return;
  }

  const int bsize = boundary.size();
  if (size >= limits_.min_size && size <= limits_.max_size && bsize <= limits_.max_boundary &&
      (!limits_.exact_boundary || bsize == *limits_.exact_boundary)) {
    pending_ = ConnectedSetRecord{set, boundary};
  }
  if (size < limits_.max_size) {
    VertexSet frontier = boundary - excluded - limits_.blocked;
    if (!frontier.empty()) {
      stack_.push_back(Frame{set, excluded, frontier, boundary});
      max_depth_ = std::max(max_depth_, static_cast<int>(stack_.size()));
    }
  }
}

std::optional<ConnectedSetRecord> ConnectedSetStream::next() {
  while (true) {
    if (pending_) {
      std::optional<ConnectedSetRecord> out = std::move(pending_);
      pending_.reset();
      return out;
    }
    if (stack_.empty()) return std::nullopt;
    Frame& top = stack_.back();
    if (top.frontier.empty() || top.excluded.size() > limits_.max_boundary) {
      stack_.pop_back();
      continue;
    }
    int u = top.frontier.pop_front();
    VertexSet child = top.set;
    child.insert(u);
    VertexSet excluded = top.excluded;
    top.excluded.insert(u);
    VertexSet boundary = (top.boundary | g_->neighbors(u)) - child;
    visit(child, excluded, boundary);
  }
}

MultiRootStream::MultiRootStream(const Graph& g, ConnectedSetLimits limits, bool distinct_by_min_root)
    : g_(&g), limits_(std::move(limits)), distinct_(distinct_by_min_root) {}

std::optional<ConnectedSetRecord> MultiRootStream::next() {
  while (true) {
    if (stream_) {
      if (auto rec = stream_->next()) {
        max_depth_ = std::max(max_depth_, stream_->max_depth());
        return rec;
      }
      max_depth_ = std::max(max_depth_, stream_->max_depth());
      stream_.reset();
    }
    if (root_ + 1 >= g_->n()) return std::nullopt;
    ++root_;
    ConnectedSetLimits limits = limits_;
    if (distinct_) limits.blocked |= VertexSet::range(root_);
    stream_.emplace(*g_, root_, std::move(limits));
  }
}

namespace {

void check_budgets(int b, int f) {
  if (b < 0 || f < 0) throw std::invalid_argument("size and boundary parameters must be non-negative");
}

ConnectedSetLimits query_limits(const ConnectedSetQuery& q) {
  check_budgets(q.b, q.f);
  ConnectedSetLimits limits;
  limits.min_size = q.b + 1;
  limits.max_size = q.b + 1;
  limits.max_boundary = q.f;
  if (q.mode == BoundaryMode::exact) limits.exact_boundary = q.f;
  return limits;
}

}  // namespace

ConnectedSetStream enumerate_rooted(const Graph& g, int v, int b, int f, BoundaryMode mode) {
  return ConnectedSetStream(g, v, query_limits({v, b, f, mode}));
}

MultiRootStream enumerate_all(const Graph& g, int size_budget, int boundary_budget) {
  check_budgets(size_budget, boundary_budget);
  ConnectedSetLimits limits;
  limits.max_size = size_budget + 1;
  limits.max_boundary = boundary_budget;
  return MultiRootStream(g, std::move(limits));
}

std::vector<ConnectedSetRecord> run_query(const Graph& g, const ConnectedSetQuery& query) {
  std::vector<ConnectedSetRecord> out;
  auto collect = [&](const ConnectedSetRecord& r) { out.push_back(r); };
  if (query.root) {
    ConnectedSetStream s(g, *query.root, query_limits(query));
    drain(s, collect);
  } else {
    MultiRootStream s(g, query_limits(query));
    drain(s, collect);
  }
  return out;
}

BigInt count_bound(int b, int f) {
  check_budgets(b, f);
  BigInt result = 1;
  for (int i = 1; i <= b; ++i) {
    result *= f + i;
    result /= i;
  }
  return result;
}

}  // namespace pmctw
