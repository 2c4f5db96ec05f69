#include "pmctw/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace pmctw::oracle {

namespace {

using Mask = std::uint32_t;

void require(const Graph& g, int limit, const char* what) {
  if (g.n() > limit) {
    throw LimitError(std::string(what) + " oracle is limited to n <= " + std::to_string(limit));
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

Mask reach_within(const std::vector<Mask>& adj, int start, Mask allowed) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

Mask mask_neighborhood(const std::vector<Mask>& adj, Mask s) {
  Mask out = 0;
  for (Mask f = s; f; f &= f - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(f))];
  return out & ~s;
}

VertexSet to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.insert(std::countr_zero(m));
  return s;
}

// Width of eliminating `order` in sequence from `adj` (modified in place).
int eliminate(std::vector<Mask>& adj, const std::vector<int>& order, Mask alive) {
  int width = -1;
  for (int v : order) {
    alive &= ~(Mask{1} << v);
    Mask nb = adj[static_cast<std::size_t>(v)] & alive;
    width = std::max(width, std::popcount(nb));
    for (Mask f = nb; f; f &= f - 1) {
      int u = std::countr_zero(f);
      adj[static_cast<std::size_t>(u)] |= nb & ~(Mask{1} << u);
    }
  }
  return width;
}

}  // namespace

int treewidth(const Graph& g) {
  require(g, kTreewidthLimit, "treewidth");
  const int n = g.n();
  if (n == 0) return -1;
  const auto adj = adjacency_masks(g);
  const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  best[0] = -1;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    int value = n;
    for (Mask f = s; f; f &= f - 1) {
      int v = std::countr_zero(f);
      Mask before = s & ~(Mask{1} << v);
      int prior = best[before];
      if (prior >= value) continue;
      Mask reach = reach_within(adj, v, before | (Mask{1} << v));
      int q = std::popcount(mask_neighborhood(adj, reach) & ~before);
      value = std::min(value, std::max(prior, q));
    }
    best[s] = static_cast<std::int8_t>(value);
    if (s == full) break;
  }
  return best[full];
}

int treewidth_by_orderings(const Graph& g) {
  require(g, kOrderingLimit, "ordering");
  const int n = g.n();
  if (n == 0) return -1;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const auto base = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  int best = n;
  do {
    auto adj = base;
    best = std::min(best, eliminate(adj, order, all));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<VertexSet> minimal_separators(const Graph& g) {
  require(g, kFamilyLimit, "separator");
  std::vector<VertexSet> out;
  const Mask limit = Mask{1} << g.n();
  for (Mask m = 0; m < limit; ++m) {
    VertexSet s = to_set(m);
    int full = 0;
    for (const auto& c : connected_components(g, s)) {
      if (neighborhood(g, c) == s) ++full;
    }
    if (full >= 2) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_pmc_literal(const Graph& g, const VertexSet& k) {
  if (k.empty()) return false;
  const int n = g.n();
  std::vector<std::vector<char>> joined(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int u : k) {
    for (int v : k) joined[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = g.adjacent(u, v) ? 1 : 0;
  }
  for (const auto& c : connected_components(g, k)) {
    VertexSet touched;
    for (int x : k) {
      for (int y : c) {
        if (g.adjacent(x, y)) touched.insert(x);
      }
    }
    if (touched == k) return false;  // full component
    for (int u : touched) {
      for (int v : touched) joined[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int u : k) {
    for (int v : k) {
      if (u != v && !joined[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

std::vector<VertexSet> pmcs(const Graph& g) {
  require(g, kFamilyLimit, "potential maximal clique");
  std::vector<VertexSet> out;
  const Mask limit = Mask{1} << g.n();
  for (Mask m = 1; m < limit; ++m) {
    VertexSet k = to_set(m);
    if (is_pmc_literal(g, k)) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_active_literal(const Graph& g, const VertexSet& omega, const VertexSet& s,
                       const std::vector<VertexSet>& all_separators) {
  std::vector<VertexSet> completed;
  for (const auto& t : all_separators) {
    if (t != s && t.is_subset_of(omega)) completed.push_back(t);
  }
  for (int u : omega) {
    for (int v : omega) {
      if (u >= v || g.adjacent(u, v)) continue;
      bool linked = std::any_of(completed.begin(), completed.end(),
                                [&](const VertexSet& t) { return t.contains(u) && t.contains(v); });
      if (!linked) return true;
    }
  }
  return false;
}

std::vector<VertexSet> nice_pmcs(const Graph& g) {
  require(g, kFamilyLimit, "nice potential maximal clique");
  const auto seps = minimal_separators(g);
  std::vector<VertexSet> out;
  for (const auto& omega : pmcs(g)) {
    for (const auto& s : seps) {
      if (s != omega && s.is_subset_of(omega) && is_active_literal(g, omega, s, seps)) {
        out.push_back(omega);
        break;
      }
    }
  }
  return out;
}

std::vector<VertexSet> connected_sets(const Graph& g, int v, int b, int f) {
  require(g, kFamilyLimit, "connected set");
  std::vector<VertexSet> out;
  if (v < 0 || v >= g.n() || b < 0 || f < 0 || b + 1 > g.n()) return out;
  const auto adj = adjacency_masks(g);
  const Mask limit = Mask{1} << g.n();
  const Mask root = Mask{1} << v;
  for (Mask m = 0; m < limit; ++m) {
    if (!(m & root) || std::popcount(m) != b + 1) continue;
    if (reach_within(adj, v, m) != m) continue;
    if (std::popcount(mask_neighborhood(adj, m)) != f) continue;
    out.push_back(to_set(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> all_connected_sets(const Graph& g) {
  require(g, kFamilyLimit, "connected set");
  std::vector<VertexSet> out;
  const auto adj = adjacency_masks(g);
  const Mask limit = Mask{1} << g.n();
  for (Mask m = 1; m < limit; ++m) {
    if (reach_within(adj, std::countr_zero(m), m) == m) out.push_back(to_set(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int leaf_bag_width(const Graph& g, const VertexSet& k) {
  const VertexSet rest = g.vertices() - k;
  if (rest.size() > kOrderingLimit || g.n() > 32) {
    throw LimitError("leaf bag oracle is limited to small instances");
  }
  auto base = adjacency_masks(g);
  Mask kmask = 0;
  for (int v : k) kmask |= Mask{1} << v;
  for (int v : k) base[static_cast<std::size_t>(v)] |= kmask & ~(Mask{1} << v);
  std::vector<int> order = rest.members();
  const Mask all = g.n() == 32 ? ~Mask{0} : ((Mask{1} << g.n()) - 1);
  int best = g.n();
  do {
    auto adj = base;
    best = std::min(best, eliminate(adj, order, all));
  } while (std::next_permutation(order.begin(), order.end()));
  return std::max(best, k.size() - 1);
}

Report treewidth_report(const Graph& g) {
  return {"treewidth", static_cast<long long>(treewidth(g)), "subset DP over elimination prefixes",
          kTreewidthLimit};
}

Report separators_report(const Graph& g) {
  return {"minimal separators", minimal_separators(g), "scan of all 2^n subsets for two full components",
          kFamilyLimit};
}

Report pmcs_report(const Graph& g) {
  return {"potential maximal cliques", pmcs(g), "scan of all 2^n subsets with the two-condition check",
          kFamilyLimit};
}

Report connected_report(const Graph& g, int v, int b, int f) {
  return {"connected sets", connected_sets(g, v, b, f), "scan of all (b+1)-subsets containing the root",
          kFamilyLimit};
}

}  // namespace pmctw::oracle
