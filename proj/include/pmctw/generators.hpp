#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmctw/graph.hpp"

namespace pmctw::gen {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph grid(int rows, int cols);
Graph complete_bipartite(int a, int b);
Graph petersen();

/// G(n, p) with a seeded 64-bit Mersenne Twister; each pair (u < v), in
/// lexicographic order, is an edge when the next 53-bit uniform draw is < p.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Uniform random labelled tree (Prüfer sequence), n >= 1.
Graph random_tree(int n, std::uint64_t seed);

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 7), in a deterministic order.
const std::vector<Graph>& connected_catalog(int n);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Small structured instances used across tests and the self-check.
std::vector<NamedGraph> structured_suite(int n_max);

}  // namespace pmctw::gen
