#include "pmctw/separators.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "pmctw/connected_sets.hpp"

namespace pmctw {

std::vector<VertexSet> SeparatorFamily::sets() const {
  std::vector<VertexSet> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.set);
  return out;
}

bool SeparatorFamily::contains(const VertexSet& s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s,
                             [](const MinimalSeparator& m, const VertexSet& key) { return m.set < key; });
  return it != members.end() && it->set == s;
}

std::map<int, std::size_t> SeparatorFamily::size_histogram() const {
  std::map<int, std::size_t> out;
  for (const auto& m : members) ++out[m.set.size()];
  return out;
}

std::optional<MinimalSeparator> is_minimal_separator(const Graph& g, const VertexSet& s) {
  auto full = full_components(g, s);
  if (full.size() < 2) return std::nullopt;
  return MinimalSeparator{s, std::move(full)};
}

namespace {

SeparatorFamily finish(std::vector<MinimalSeparator> members, std::optional<int> cap) {
  std::sort(members.begin(), members.end(),
            [](const MinimalSeparator& a, const MinimalSeparator& b) { return a.set < b.set; });
  return SeparatorFamily{std::move(members), cap};
}

}  // namespace

SeparatorFamily list_minimal_separators(const Graph& g) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::deque<VertexSet> queue;
  std::vector<MinimalSeparator> members;

  auto offer = [&](const VertexSet& s) {
    if (!seen.insert(s).second) return;
    auto cert = is_minimal_separator(g, s);
    if (!cert) throw std::logic_error("separator closure produced a set that is not a minimal separator");
    members.push_back(std::move(*cert));
    queue.push_back(s);
  };

  for (int v = 0; v < g.n(); ++v) {
    VertexSet closed = g.neighbors(v);
    closed.insert(v);
    for (const auto& c : connected_components(g, closed)) offer(neighborhood(g, c));
  }
  while (!queue.empty()) {
    VertexSet s = queue.front();
    queue.pop_front();
    for (int x : s) {
      for (const auto& d : connected_components(g, s | g.neighbors(x))) offer(neighborhood(g, d));
    }
  }
  return finish(std::move(members), std::nullopt);
}

SeparatorFamily list_minimal_separators_bounded(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("separator size bound must be non-negative");
  const int n = g.n();
  ConnectedSetLimits limits;
  limits.max_size = std::max(1, n / 2);
  limits.max_boundary = k;
  limits.viable = [n](int size, int boundary_lb) { return 2 * size + boundary_lb <= n; };

  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<MinimalSeparator> members;
  MultiRootStream stream(g, std::move(limits));
  drain(stream, [&](const ConnectedSetRecord& rec) {
    if (2 * rec.set.size() + rec.boundary.size() > n) return;
    if (!seen.insert(rec.boundary).second) return;
    if (auto cert = is_minimal_separator(g, rec.boundary)) members.push_back(std::move(*cert));
  });
  return finish(std::move(members), k);
}

}  // namespace pmctw
