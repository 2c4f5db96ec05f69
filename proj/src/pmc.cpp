#include "pmctw/pmc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "pmctw/connected_sets.hpp"
#include "pmctw/separators.hpp"

namespace pmctw {

std::vector<VertexSet> PotentialMaximalClique::distinct_separators() const {
  std::vector<VertexSet> out = separators;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<PotentialMaximalClique> is_pmc(const Graph& g, const VertexSet& k) {
  if (k.empty() || !k.is_subset_of(g.vertices())) return std::nullopt;
  PotentialMaximalClique out;
  out.set = k;
  VertexSet rest = g.vertices() - k;
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest.front(), rest);
    rest = rest - c;
    VertexSet s = neighborhood(g, c);
    if (s == k) return std::nullopt;
    out.components.push_back(c);
    out.separators.push_back(s);
  }
  for (int u : k) {
    VertexSet cover = g.neighbors(u);
    for (const auto& s : out.separators) {
      if (s.contains(u)) cover |= s;
    }
    VertexSet rest = k;
    rest.erase(u);
    if (!rest.is_subset_of(cover)) return std::nullopt;
  }
  return out;
}

bool is_active_separator(const Graph& g, const PotentialMaximalClique& omega, const VertexSet& s) {
  if (std::find(omega.separators.begin(), omega.separators.end(), s) == omega.separators.end()) {
    throw std::invalid_argument("set is not a minimal separator of this potential maximal clique");
  }
  for (int u : omega.set) {
    VertexSet cover = g.neighbors(u);
    for (const auto& t : omega.separators) {
      if (t != s && t.contains(u)) cover |= t;
    }
    VertexSet rest = omega.set;
    rest.erase(u);
    if (!rest.is_subset_of(cover)) return true;
  }
  return false;
}

bool is_nice_pmc(const Graph& g, const PotentialMaximalClique& omega) {
  for (const auto& s : omega.distinct_separators()) {
    if (is_active_separator(g, omega, s)) return true;
  }
  return false;
}

VertexRepresentation vertex_representation(const Graph& g, const VertexSet& omega, int v) {
  if (!omega.contains(v)) throw std::invalid_argument("vertex representation needs a member of the set");
  VertexSet others = omega;
  others.erase(v);
  return {v, component_of(g, v, g.vertices() - others)};
}

VertexSet reconstruct_from_representation(const Graph& g, const VertexRepresentation& rep) {
  VertexSet out = neighborhood(g, rep.component);
  out.insert(rep.vertex);
  return out;
}

namespace {

int two_thirds_ceil(int x) { return (2 * x + 2) / 3; }

}  // namespace

void enumerate_nice_pmcs(const Graph& g, std::optional<int> size_cap, const PmcVisitor& visit) {
  const int n = g.n();
  if (n == 0 || (size_cap && *size_cap < 1)) return;
  std::unordered_set<VertexSet, VertexSetHash> tested;
  for (int v = 0; v < n; ++v) {
    ConnectedSetLimits limits;
    limits.max_size = two_thirds_ceil(n - 1) + 1;
    if (size_cap) limits.max_boundary = *size_cap - 1;
    // |Ω| >= boundary + 1, so the size filter below is monotone along a branch.
    limits.viable = [n](int size, int boundary_lb) { return size - 1 <= two_thirds_ceil(n - boundary_lb - 1); };
    ConnectedSetStream stream(g, v, std::move(limits));
    drain(stream, [&](const ConnectedSetRecord& rec) {
      VertexSet omega = rec.boundary;
      omega.insert(v);
      const int omega_size = omega.size();
      if (rec.set.size() - 1 > two_thirds_ceil(n - omega_size)) return;
      if (size_cap && omega_size > *size_cap) return;
      if (!tested.insert(omega).second) return;
      auto pmc = is_pmc(g, omega);
      if (pmc && is_nice_pmc(g, *pmc)) visit(*pmc);
    });
  }
}

std::vector<PotentialMaximalClique> nice_pmcs(const Graph& g, std::optional<int> size_cap) {
  std::vector<PotentialMaximalClique> out;
  enumerate_nice_pmcs(g, size_cap, [&](const PotentialMaximalClique& p) { out.push_back(p); });
  std::sort(out.begin(), out.end(),
            [](const PotentialMaximalClique& a, const PotentialMaximalClique& b) { return a.set < b.set; });
  return out;
}

std::vector<int> pmc_vertex_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  return order;
}

std::vector<PotentialMaximalClique> list_pmcs(const Graph& g, std::optional<int> size_cap,
                                              const PrefixObserver& observer) {
  const int n = g.n();
  if (n == 0 || (size_cap && *size_cap < 1)) return {};
  const std::vector<int> order = pmc_vertex_order(g);
  const Graph relabeled = induced_subgraph_ordered(g, order).graph;
  auto fits = [&](const VertexSet& s) { return !size_cap || s.size() <= *size_cap; };

  std::vector<VertexSet> previous;
  std::vector<VertexSet> current;
  for (int i = 1; i <= n; ++i) {
    const int added = i - 1;
    // Prefix ids coincide with relabeled ids, so families carry over as-is.
    const Graph prefix = induced_subgraph(relabeled, VertexSet::range(i)).graph;
    current.clear();
    if (i == 1) {
      current.push_back(VertexSet::singleton(0));
    } else {
      std::unordered_set<VertexSet, VertexSetHash> seen;
      auto consider = [&](const VertexSet& cand) {
        if (!fits(cand) || !seen.insert(cand).second) return;
        if (is_pmc(prefix, cand)) current.push_back(cand);
      };
      enumerate_nice_pmcs(prefix, size_cap, [&](const PotentialMaximalClique& p) {
        if (seen.insert(p.set).second) current.push_back(p.set);
      });
      for (const auto& prev : previous) {
        consider(prev);
        VertexSet grown = prev;
        grown.insert(added);
        consider(grown);
      }
      SeparatorFamily seps = size_cap ? list_minimal_separators_bounded(prefix, *size_cap - 1)
                                      : list_minimal_separators(prefix);
      for (const auto& sep : seps.members) {
        VertexSet grown = sep.set;
        grown.insert(added);
        consider(grown);
      }
    }
    std::sort(current.begin(), current.end());
    if (observer) observer(prefix, order, current);
    std::swap(previous, current);
  }

  InducedSubgraph back{relabeled, order};
  std::vector<PotentialMaximalClique> out;
  out.reserve(previous.size());
  for (const auto& local : previous) {
    auto pmc = is_pmc(g, back.lift(local));
    if (!pmc) throw std::logic_error("relabelled potential maximal clique failed verification");
    out.push_back(std::move(*pmc));
  }
  std::sort(out.begin(), out.end(),
            [](const PotentialMaximalClique& a, const PotentialMaximalClique& b) { return a.set < b.set; });
  return out;
}

}  // namespace pmctw
