#include "pmctw/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pmctw {

Graph::Graph(int n) : n_(n), all_(VertexSet::range(n)) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    auto& nu = adjacency_[static_cast<std::size_t>(u)];
    if (nu.contains(v)) continue;
    nu.insert(v);
    adjacency_[static_cast<std::size_t>(v)].insert(u);
    ++m_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
  VertexSet out;
  for (int v : local) out.insert(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

InducedSubgraph induced_subgraph_ordered(const Graph& g, std::span<const int> order) {
  if (order.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
  std::vector<int> to_local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 0 || v >= g.n() || to_local[static_cast<std::size_t>(v)] >= 0) {
      throw std::invalid_argument("induced subgraph order must list distinct valid vertices");
    }
    to_local[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : g.neighbors(order[i])) {
      int j = to_local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return {Graph(static_cast<int>(order.size()), edges), std::vector<int>(order.begin(), order.end())};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
  if (!w.is_subset_of(g.vertices())) {
    throw std::invalid_argument("induced subgraph vertex set exceeds the graph");
  }
  std::vector<int> order = w.members();
  return induced_subgraph_ordered(g, order);
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (int v : s) out |= g.neighbors(v);
  return out - s;
}

VertexSet component_of(const Graph& g, int start, const VertexSet& allowed) {
  VertexSet reached = VertexSet::singleton(start);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& forbidden) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.vertices() - forbidden;
  const VertexSet allowed = remaining;
  while (!remaining.empty()) {
    VertexSet comp = component_of(g, remaining.front(), allowed);
    remaining -= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (auto& c : connected_components(g, s)) {
    if (neighborhood(g, c) == s) out.push_back(c);
  }
  return out;
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return component_of(g, s.front(), s) == s;
}

bool is_connected(const Graph& g) { return is_connected_set(g, g.vertices()); }

bool is_clique(const Graph& g, const VertexSet& w) {
  for (int v : w) {
    VertexSet rest = w;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

std::optional<std::vector<int>> is_chordal(const Graph& g) {
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering exactly when the graph is chordal.
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    int best = -1;
    for (int v : unvisited) {
      if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    }
    unvisited.erase(best);
    visit.push_back(best);
    for (int w : g.neighbors(best) & unvisited) ++weight[static_cast<std::size_t>(w)];
  }
  std::vector<int> peo(visit.rbegin(), visit.rend());

  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;

  VertexSet later = g.vertices();
  for (int v : peo) {
    later.erase(v);
    VertexSet higher = g.neighbors(v) & later;
    if (higher.empty()) continue;
    int parent = -1;
    for (int w : higher) {
      if (parent < 0 || position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(parent)]) parent = w;
    }
    higher.erase(parent);
    if (!higher.is_subset_of(g.neighbors(parent))) return std::nullopt;
  }
  return peo;
}

int chordal_clique_number(const Graph& g, std::span<const int> peo) {
  if (g.n() == 0) return 0;
  int best = 1;
  VertexSet later = g.vertices();
  for (int v : peo) {
    later.erase(v);
    best = std::max(best, 1 + (g.neighbors(v) & later).size());
  }
  return best;
}

Graph complete_sets(const Graph& g, std::span<const VertexSet> cliques) {
  std::vector<Edge> edges = g.edges();
  for (const auto& c : cliques) {
    for (int u : c) {
      for (int v : c) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
  }
  return Graph(g.n(), edges);
}

}  // namespace pmctw
