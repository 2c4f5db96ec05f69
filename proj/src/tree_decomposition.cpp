#include "pmctw/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace pmctw {

int TreeDecomposition::width() const {
  int best = -1;
  for (const auto& bag : bags) best = std::max(best, bag.size() - 1);
  return best;
}

namespace {

// Union-find check that the edge list forms a single tree on `nodes` nodes.
bool forms_tree(int nodes, std::span<const std::pair<int, int>> edges) {
  if (nodes == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != nodes - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [a, b] : edges) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return true;
}

}  // namespace

std::optional<std::string> check_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int nodes = static_cast<int>(td.bags.size());
  if (g.n() > 0 && nodes == 0) return "decomposition has no bags";
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) return "tree edge references a missing bag";
  }
  if (!forms_tree(nodes, td.edges)) return "bag edges do not form a tree";

  VertexSet covered;
  for (const auto& bag : td.bags) {
    if (!bag.is_subset_of(g.vertices())) return "bag contains a vertex outside the graph";
    covered |= bag;
  }
  if (covered != g.vertices()) return "some vertex is in no bag";

  for (auto [u, v] : g.edges()) {
    bool found = std::any_of(td.bags.begin(), td.bags.end(),
                             [&](const VertexSet& bag) { return bag.contains(u) && bag.contains(v); });
    if (!found) {
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
    }
  }

  // For each vertex the bags holding it must induce a connected subtree:
  // in a forest, that holds iff (#nodes - #internal edges) == 1.
  for (int v = 0; v < g.n(); ++v) {
    int holding = 0;
    for (const auto& bag : td.bags) holding += bag.contains(v) ? 1 : 0;
    int internal = 0;
    for (auto [a, b] : td.edges) {
      if (td.bags[static_cast<std::size_t>(a)].contains(v) && td.bags[static_cast<std::size_t>(b)].contains(v)) ++internal;
    }
    if (holding - internal != 1) {
      return "bags containing vertex " + std::to_string(v) + " are not connected";
    }
  }
  return std::nullopt;
}

std::vector<Edge> triangulation_from_bags(const Graph& g, const TreeDecomposition& td) {
  return complete_sets(g, td.bags).edges();
}

std::optional<std::string> check_triangulation(const Graph& g, std::span<const Edge> h_edges,
                                               int claimed_width) {
  Graph h;
  try {
    h = Graph(g.n(), h_edges);
  } catch (const std::invalid_argument& e) {
    return std::string("triangulation edge list invalid: ") + e.what();
  }
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(u, v)) return "triangulation misses edge " + std::to_string(u) + "-" + std::to_string(v);
  }
  auto peo = is_chordal(h);
  if (!peo) return "triangulation is not chordal";
  int omega = chordal_clique_number(h, *peo);
  if (omega - 1 != claimed_width) {
    return "triangulation clique number " + std::to_string(omega) + " does not match width " +
           std::to_string(claimed_width);
  }
  return std::nullopt;
}

}  // namespace pmctw
