#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pmctw/graph.hpp"

namespace pmctw {

/// A verified potential maximal clique with its certificate: the components
/// of G \ Ω and, for each, the set of Ω-vertices it touches.
struct PotentialMaximalClique {
  VertexSet set;
  std::vector<VertexSet> components;
  /// separators[i] = N(components[i]); may repeat.
  std::vector<VertexSet> separators;

  /// The separators without repeats, in canonical order.
  std::vector<VertexSet> distinct_separators() const;
};

/// (C_v, v): the component of G \ (Ω \ {v}) that contains v.
struct VertexRepresentation {
  int vertex = -1;
  VertexSet component;
};

/// Checks both conditions: no component of G \ K is full for K, and K
/// becomes complete once each N(C_i) is completed. Runs in O(n·m) word ops.
std::optional<PotentialMaximalClique> is_pmc(const Graph& g, const VertexSet& k);

/// Whether Ω fails to be a clique after completing every separator of Ω
/// except S. Throws std::invalid_argument when S is not among Ω's separators.
bool is_active_separator(const Graph& g, const PotentialMaximalClique& omega, const VertexSet& s);

bool is_nice_pmc(const Graph& g, const PotentialMaximalClique& omega);

VertexRepresentation vertex_representation(const Graph& g, const VertexSet& omega, int v);

/// N(C_v) ∪ {v}.
VertexSet reconstruct_from_representation(const Graph& g, const VertexRepresentation& rep);

using PmcVisitor = std::function<void(const PotentialMaximalClique&)>;

/// Every nice PMC (of size <= size_cap when given), each reported once.
/// Candidates are Ω = N(C) ∪ {v} for connected C ∋ v with
/// |C| - 1 <= ceil(2(n - |Ω|)/3); each is certified with is_pmc and is_nice_pmc.
void enumerate_nice_pmcs(const Graph& g, std::optional<int> size_cap, const PmcVisitor& visit);

std::vector<PotentialMaximalClique> nice_pmcs(const Graph& g, std::optional<int> size_cap = std::nullopt);

/// Called once per processed prefix with the prefix graph (vertex i of it is
/// order[i] of the parent) and its PMC family in prefix ids.
using PrefixObserver =
    std::function<void(const Graph& prefix, std::span<const int> order, std::span<const VertexSet> family)>;

/// All PMCs (of size <= size_cap when given), in canonical order.
///
/// Vertices are added one at a time in ascending-degree order. A PMC of the
/// current prefix graph is either a nice PMC of it, a PMC Ω' of the
/// previous prefix or Ω' plus the new vertex, or a minimal separator of the
/// current prefix plus the new vertex. Only two generations are kept.
std::vector<PotentialMaximalClique> list_pmcs(const Graph& g, std::optional<int> size_cap = std::nullopt,
                                              const PrefixObserver& observer = {});

/// The prefix order used by list_pmcs: ascending degree, ties by id.
std::vector<int> pmc_vertex_order(const Graph& g);

}  // namespace pmctw
