#include "pmctw/treewidth_dp.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace pmctw {

namespace {

constexpr int kInfinite = std::numeric_limits<int>::max();

struct Block {
  VertexSet separator;
  VertexSet component;
  int value = kInfinite;
  int choice = -1;
};

class BlockDp {
 public:
  BlockDp(const Graph& g, const SeparatorFamily& separators, std::span<const PotentialMaximalClique> pmcs,
          std::optional<int> k)
      : g_(g), pmcs_(pmcs), max_bag_(k ? *k + 1 : kInfinite), bounded_(k.has_value()) {
    for (const auto& sep : separators.members) {
      for (const auto& c : sep.full_components) blocks_.push_back(Block{sep.set, c});
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) {
      int sa = a.component.size();
      int sb = b.component.size();
      return sa != sb ? sa < sb : a.component < b.component;
    });
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (!by_component_.emplace(blocks_[i].component, static_cast<int>(i)).second) {
        throw InconsistentFamiliesError("duplicate block in separator family");
      }
    }
    for (std::size_t p = 0; p < pmcs.size(); ++p) {
      if (pmcs[p].set.size() > max_bag_) continue;
      for (const auto& s : pmcs[p].distinct_separators()) {
        by_separator_[s].push_back(static_cast<int>(p));
      }
    }
  }

  std::optional<TreewidthSolution> solve() {
    for (auto& block : blocks_) evaluate(block);

    int best = kInfinite;
    int root = -1;
    for (std::size_t p = 0; p < pmcs_.size(); ++p) {
      const auto& omega = pmcs_[p];
      if (omega.set.size() > max_bag_) continue;
      int cost = omega.set.size() - 1;
      for (const auto& c : omega.components) {
        cost = std::max(cost, lookup(c).value);
        if (cost >= best) break;
      }
      if (cost < best) {
        best = cost;
        root = static_cast<int>(p);
      }
    }
    if (root < 0) {
      if (bounded_) return std::nullopt;
      throw InconsistentFamiliesError("no potential maximal clique yields a finite width");
    }
    return trace(root, best);
  }

 private:
  const Block& lookup(const VertexSet& component) const {
    auto it = by_component_.find(component);
    if (it == by_component_.end()) {
      throw InconsistentFamiliesError("component's neighborhood is missing from the separator family");
    }
    return blocks_[static_cast<std::size_t>(it->second)];
  }

  std::vector<VertexSet> inner_components(const VertexSet& component, const VertexSet& omega) const {
    return connected_components(g_, g_.vertices() - (component - omega));
  }

  void evaluate(Block& block) {
    const VertexSet realm = block.separator | block.component;
    auto it = by_separator_.find(block.separator);
    if (it != by_separator_.end()) {
      for (int p : it->second) {
        const VertexSet& omega = pmcs_[static_cast<std::size_t>(p)].set;
        if (!omega.is_subset_of(realm)) continue;
        int cost = omega.size() - 1;
        if (cost >= block.value) continue;
        for (const auto& inner : inner_components(block.component, omega)) {
          const Block& sub = lookup(inner);
          if (sub.component.size() >= block.component.size()) {
            throw InconsistentFamiliesError("block refers to a block that is not smaller");
          }
          cost = std::max(cost, sub.value);
          if (cost >= block.value) break;
        }
        if (cost < block.value) {
          block.value = cost;
          block.choice = p;
        }
      }
    }
    if (block.choice < 0 && !bounded_) {
      throw InconsistentFamiliesError("block has no covering potential maximal clique");
    }
  }

  TreewidthSolution trace(int root, int width) const {
    TreewidthSolution out;
    out.width = width;
    auto& td = out.decomposition;
    td.bags.push_back(pmcs_[static_cast<std::size_t>(root)].set);
    struct Pending {
      int parent;
      VertexSet component;
    };
    std::vector<Pending> work;
    for (const auto& c : pmcs_[static_cast<std::size_t>(root)].components) work.push_back({0, c});
    while (!work.empty()) {
      Pending item = work.back();
      work.pop_back();
      const Block& block = lookup(item.component);
      const VertexSet& omega = pmcs_[static_cast<std::size_t>(block.choice)].set;
      int id = static_cast<int>(td.bags.size());
      td.bags.push_back(omega);
      td.edges.emplace_back(item.parent, id);
      for (const auto& inner : inner_components(block.component, omega)) work.push_back({id, inner});
    }
    out.triangulation = triangulation_from_bags(g_, td);
    return out;
  }

  const Graph& g_;
  std::span<const PotentialMaximalClique> pmcs_;
  int max_bag_;
  bool bounded_;
  std::vector<Block> blocks_;
  std::unordered_map<VertexSet, int, VertexSetHash> by_component_;
  std::unordered_map<VertexSet, std::vector<int>, VertexSetHash> by_separator_;
};

// Solves each component with `solve_one` and joins the decompositions by
// attaching every component's root bag to the first bag.
template <class SolveOne>
std::optional<TreewidthSolution> per_component(const Graph& g, SolveOne&& solve_one) {
  TreewidthSolution out;
  for (const auto& comp : connected_components(g, VertexSet{})) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    std::optional<TreewidthSolution> part = solve_one(sub.graph);
    if (!part) return std::nullopt;
    const int offset = static_cast<int>(out.decomposition.bags.size());
    for (const auto& bag : part->decomposition.bags) out.decomposition.bags.push_back(sub.lift(bag));
    for (auto [a, b] : part->decomposition.edges) out.decomposition.edges.emplace_back(a + offset, b + offset);
    if (offset > 0) out.decomposition.edges.emplace_back(0, offset);
    out.width = std::max(out.width, part->width);
  }
  out.triangulation = triangulation_from_bags(g, out.decomposition);
  return out;
}

}  // namespace

TreewidthSolution compute_treewidth(const Graph& g, const SeparatorFamily& separators,
                                    std::span<const PotentialMaximalClique> pmcs) {
  if (!is_connected(g) || g.n() == 0) throw std::invalid_argument("compute_treewidth needs a nonempty connected graph");
  return *BlockDp(g, separators, pmcs, std::nullopt).solve();
}

std::optional<TreewidthSolution> compute_treewidth_bounded(const Graph& g, const SeparatorFamily& separators,
                                                           std::span<const PotentialMaximalClique> pmcs, int k) {
  if (!is_connected(g) || g.n() == 0) throw std::invalid_argument("compute_treewidth_bounded needs a nonempty connected graph");
  if (k < 0) throw std::invalid_argument("width bound must be non-negative");
  return BlockDp(g, separators, pmcs, k).solve();
}

TreewidthSolution exact_treewidth(const Graph& g) {
  return *per_component(g, [](const Graph& h) -> std::optional<TreewidthSolution> {
    auto seps = list_minimal_separators(h);
    auto pmcs = list_pmcs(h);
    return compute_treewidth(h, seps, pmcs);
  });
}

std::optional<TreewidthSolution> decide_treewidth_at_most_k(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("width bound must be non-negative");
  return per_component(g, [k](const Graph& h) -> std::optional<TreewidthSolution> {
    auto seps = list_minimal_separators_bounded(h, k);
    auto pmcs = list_pmcs(h, k + 1);
    return compute_treewidth_bounded(h, seps, pmcs, k);
  });
}

TreewidthSolution treewidth_by_k_scan(const Graph& g, int* attempts) {
  int tries = 0;
  for (int k = 1;; ++k) {
    ++tries;
    if (auto sol = decide_treewidth_at_most_k(g, k)) {
      if (attempts) *attempts = tries;
      return *sol;
    }
  }
}

}  // namespace pmctw
