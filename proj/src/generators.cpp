#include "pmctw/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace pmctw::gen {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph grid(int rows, int cols) {
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(rows * cols, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, e);
}

Graph petersen() {
  // Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9.
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n <= 2) return path(n);
  std::mt19937_64 rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> e;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        e.emplace_back(leaf, c);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(c)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        e.emplace_back(a, v);
        break;
      }
    }
  }
  return Graph(n, e);
}

namespace {

constexpr int kCatalogMax = 7;

using Adj = std::vector<unsigned>;

// Upper-triangle bit code of the graph relabelled by perm (perm[i] is the
// original vertex placed at position i).
std::uint32_t encode(const Adj& adj, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::uint32_t code = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> perm[static_cast<std::size_t>(j)]) & 1U) {
        code |= std::uint32_t{1} << bit;
      }
    }
  }
  return code;
}

Adj decode(std::uint32_t code, int n) {
  Adj adj(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) {
        adj[static_cast<std::size_t>(i)] |= 1U << j;
        adj[static_cast<std::size_t>(j)] |= 1U << i;
      }
    }
  }
  return adj;
}

// Minimum code over relabellings that list vertices by nonincreasing degree.
// Isomorphic graphs share the same degree classes, so the minimum is an
// isomorphism invariant that separates non-isomorphic graphs.
std::uint32_t canonical_code(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> byDegree(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) byDegree[static_cast<std::size_t>(i)] = i;
  auto deg = [&](int v) { return __builtin_popcount(adj[static_cast<std::size_t>(v)]); };
  std::stable_sort(byDegree.begin(), byDegree.end(), [&](int a, int b) { return deg(a) > deg(b); });
  std::vector<std::pair<int, int>> classes;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(byDegree[static_cast<std::size_t>(j)]) == deg(byDegree[static_cast<std::size_t>(i)])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::vector<int> perm = byDegree;
  for (auto [b, e] : classes) std::sort(perm.begin() + b, perm.begin() + e);
  std::uint32_t best = ~std::uint32_t{0};
  // Odometer over per-class permutations.
  while (true) {
    best = std::min(best, encode(adj, perm));
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(perm.begin() + b, perm.begin() + e)) break;
    }
    if (c == classes.size()) break;
  }
  return best;
}

bool connected_adj(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  unsigned seen = 1;
  unsigned frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1U) next |= adj[static_cast<std::size_t>(v)];
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == (1U << n) - 1;
}

Graph to_graph(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((adj[static_cast<std::size_t>(i)] >> j) & 1U) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

std::vector<std::vector<Graph>> build_catalog() {
  std::vector<std::vector<Graph>> connected(kCatalogMax + 1);
  std::vector<std::uint32_t> level = {0};  // all graphs on 1 vertex
  connected[1].push_back(Graph(1));
  for (int n = 2; n <= kCatalogMax; ++n) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : level) {
      Adj base = decode(code, n - 1);
      base.push_back(0);
      for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        Adj adj = base;
        adj[static_cast<std::size_t>(n - 1)] = mask;
        for (int v = 0; v < n - 1; ++v) {
          if ((mask >> v) & 1U) adj[static_cast<std::size_t>(v)] |= 1U << (n - 1);
        }
        next.insert(canonical_code(adj));
      }
    }
    level.assign(next.begin(), next.end());
    for (std::uint32_t code : level) {
      Adj adj = decode(code, n);
      if (connected_adj(adj)) connected[static_cast<std::size_t>(n)].push_back(to_graph(adj));
    }
  }
  return connected;
}

}  // namespace

const std::vector<Graph>& connected_catalog(int n) {
  static const std::vector<std::vector<Graph>> catalog = build_catalog();
  if (n < 1 || n > kCatalogMax) throw std::invalid_argument("catalog covers 1 <= n <= 7");
  return catalog[static_cast<std::size_t>(n)];
}

std::vector<NamedGraph> structured_suite(int n_max) {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, Graph g) {
    if (g.n() <= n_max) out.push_back({std::move(name), std::move(g)});
  };
  for (int n = 1; n <= n_max; ++n) add("P" + std::to_string(n), path(n));
  for (int n = 3; n <= n_max; ++n) add("C" + std::to_string(n), cycle(n));
  for (int n = 1; n <= std::min(n_max, 9); ++n) add("K" + std::to_string(n), complete(n));
  for (int k = 2; k + 1 <= n_max; k += 2) add("star" + std::to_string(k), star(k));
  add("grid2x2", grid(2, 2));
  add("grid2x3", grid(2, 3));
  add("grid3x3", grid(3, 3));
  add("grid2x5", grid(2, 5));
  add("grid3x4", grid(3, 4));
  add("K2,3", complete_bipartite(2, 3));
  add("K3,3", complete_bipartite(3, 3));
  add("K3,4", complete_bipartite(3, 4));
  add("petersen", petersen());
  add("2K3", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
  return out;
}

}  // namespace pmctw::gen
