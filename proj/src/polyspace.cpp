#include "pmctw/polyspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pmctw/connected_sets.hpp"

namespace pmctw {

PolySpaceConfig PolySpaceConfig::with_alpha(double alpha) {
  PolySpaceConfig cfg;
  cfg.alpha_split = alpha;
  cfg.sep_cap_fraction = 1.0 - 2.0 * alpha;
  return cfg;
}

void PolySpaceConfig::validate() const {
  if (!(alpha_split > 0.0 && alpha_split < 0.5)) {
    throw std::invalid_argument("alpha_split must lie strictly between 0 and 1/2");
  }
  if (std::abs(sep_cap_fraction - (1.0 - 2.0 * alpha_split)) > 1e-9) {
    throw std::invalid_argument("sep_cap_fraction must equal 1 - 2 * alpha_split");
  }
}

namespace {

// ceil(x * n) and floor(x * n), tolerant of the rounding in x.
int ceil_fraction(double x, int n) { return static_cast<int>(std::ceil(x * n - 1e-9)); }
int floor_fraction(double x, int n) { return static_cast<int>(std::floor(x * n + 1e-9)); }

void note_depth(PolySpaceStats* stats, int enumeration_depth, int recursion_depth, int extra_sets) {
  if (!stats) return;
  stats->max_enumeration_depth = std::max(stats->max_enumeration_depth, enumeration_depth);
  stats->max_recursion_depth = std::max(stats->max_recursion_depth, recursion_depth);
  // Three sets per branch frame, two per halving frame, plus the caller's.
  stats->peak_live_sets =
      std::max(stats->peak_live_sets, 4 * stats->max_enumeration_depth + 2 * stats->max_recursion_depth + extra_sets);
}

// Elimination-ordering search for the vertices `rest` = universe \ clique,
// with the clique eliminated last. cost(L, v) is the number of vertices
// outside L ∪ {v} reachable from v through L.
class LeafBagSearch {
 public:
  LeafBagSearch(const Graph& g, const VertexSet& universe, const VertexSet& clique)
      : g_(g), universe_(universe), clique_(clique), rest_(universe - clique) {}

  /// min(best ordering cost, upper); stops early once `floor` is reached.
  int solve(int upper, int floor, std::vector<int>* order = nullptr) {
    return solve_range(VertexSet{}, rest_, upper, floor, 1, order);
  }

  int max_depth() const { return max_depth_; }

  VertexSet higher_neighbors(const VertexSet& eliminated, int v) const {
    VertexSet allowed = eliminated;
    allowed.insert(v);
    return neighborhood(g_, component_of(g_, v, allowed)) & universe_;
  }

 private:
  int solve_range(const VertexSet& before, const VertexSet& upto, int upper, int floor, int depth,
                  std::vector<int>* order) {
    max_depth_ = std::max(max_depth_, depth);
    const VertexSet todo = upto - before;
    const int count = todo.size();
    if (count == 0) return std::min(upper, floor);
    if (count == 1) {
      int v = todo.front();
      if (order) order->assign(1, v);
      return std::min(upper, higher_neighbors(before, v).size());
    }
    const std::vector<int> members = todo.members();
    const int half = count / 2;
    std::vector<int> pick(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) pick[static_cast<std::size_t>(i)] = i;

    int best = upper;
    std::vector<int> first_order;
    std::vector<int> second_order;
    while (true) {
      VertexSet first = before;
      for (int i : pick) first.insert(members[static_cast<std::size_t>(i)]);
      int a = solve_range(before, first, best, floor, depth + 1, order ? &first_order : nullptr);
      if (a < best) {
        int b = solve_range(first, upto, best, floor, depth + 1, order ? &second_order : nullptr);
        int value = std::max(a, b);
        if (value < best) {
          best = value;
          if (order) {
            *order = first_order;
            order->insert(order->end(), second_order.begin(), second_order.end());
          }
          if (best <= floor) break;
        }
      }
      // Next combination of `half` indices out of `count`.
      int i = half - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == count - half + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < half; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return best;
  }

  const Graph& g_;
  VertexSet universe_;
  VertexSet clique_;
  VertexSet rest_;
  int max_depth_ = 0;
};

// Width of G with `clique` completed, or a value >= upper when that width is
// not below `upper`. Each component of G \ clique is solved with the clique
// as a leaf bag.
int completed_width(const Graph& g, const VertexSet& clique, int upper, PolySpaceStats* stats,
                    int enumeration_depth) {
  int cost = clique.size() - 1;
  if (cost >= upper) return cost;
  auto comps = connected_components(g, clique);
  std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  for (const auto& c : comps) {
    LeafBagSearch search(g, c | clique, clique);
    if (stats) ++stats->leaf_bag_calls;
    int value = search.solve(upper, cost);
    note_depth(stats, enumeration_depth, search.max_depth(), static_cast<int>(comps.size()) + 1);
    cost = std::max(cost, value);
    if (cost >= upper) return cost;
  }
  return cost;
}

int largest_component(const std::vector<VertexSet>& comps) {
  int best = 0;
  for (const auto& c : comps) best = std::max(best, c.size());
  return best;
}

// PMCs reached through vertex representations (C_u, u) with
// |N[C_u]| <= closed_cap whose largest component satisfies `accept`. Each
// PMC is reported from the smallest u whose representation meets the cap.
template <class Accept, class Visit>
void stream_represented_pmcs(const Graph& g, int closed_cap, Accept&& accept, Visit&& visit,
                             PolySpaceStats* stats) {
  for (int u = 0; u < g.n(); ++u) {
    ConnectedSetLimits limits;
    limits.max_closed = closed_cap;
    ConnectedSetStream stream(g, u, std::move(limits));
    while (auto rec = stream.next()) {
      VertexSet omega = rec->boundary;
      omega.insert(u);
      auto pmc = is_pmc(g, omega);
      if (!pmc || !accept(largest_component(pmc->components))) continue;
      bool canonical = true;
      for (int w : omega) {
        if (w >= u) break;
        if (closed_neighborhood(g, vertex_representation(g, omega, w).component).size() <= closed_cap) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      note_depth(stats, stream.max_depth(), 0, 2);
      if (!visit(*pmc, stream.max_depth())) return;
    }
  }
}

}  // namespace

void list_pmcs_large_component(const Graph& g, double alpha, const PmcVisitor& visit, PolySpaceStats* stats) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  const int n = g.n();
  const int min_component = std::max(1, ceil_fraction(alpha, n));
  if (min_component > n - 1) return;
  stream_represented_pmcs(
      g, floor_fraction(1.0 - alpha, n), [&](int largest) { return largest >= min_component; },
      [&](const PotentialMaximalClique& p, int) {
        visit(p);
        return true;
      },
      stats);
}

LeafBagResult treewidth_leaf_bag(const Graph& g, const VertexSet& k) {
  if (k.empty() || !k.is_subset_of(g.vertices())) throw std::invalid_argument("leaf bag must be a nonempty vertex set");
  if (!is_clique(g, k)) throw std::invalid_argument("leaf bag must be a clique");
  LeafBagSearch search(g, g.vertices(), k);
  std::vector<int> order;
  const int floor = k.size() - 1;
  LeafBagResult out;
  out.width = std::max(floor, search.solve(g.n(), floor, &order));

  // Elimination tree: bag {v} ∪ Q(v) hangs below the bag of the earliest
  // eliminated vertex of Q(v), or below the K bag when Q(v) ⊆ K.
  TreeDecomposition& td = out.decomposition;
  const int n = g.n();
  std::vector<int> bag_of(static_cast<std::size_t>(n), -1);
  std::vector<int> position(static_cast<std::size_t>(n), n);
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  td.bags.push_back(k);
  VertexSet eliminated;
  std::vector<VertexSet> higher;
  for (int v : order) {
    VertexSet q = search.higher_neighbors(eliminated, v);
    VertexSet bag = q;
    bag.insert(v);
    bag_of[static_cast<std::size_t>(v)] = static_cast<int>(td.bags.size());
    td.bags.push_back(bag);
    higher.push_back(q);
    eliminated.insert(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    int parent = 0;
    int parent_pos = n;
    for (int w : higher[i]) {
      if (position[static_cast<std::size_t>(w)] < parent_pos) {
        parent_pos = position[static_cast<std::size_t>(w)];
        parent = bag_of[static_cast<std::size_t>(w)];
      }
    }
    td.edges.emplace_back(parent, bag_of[static_cast<std::size_t>(order[i])]);
  }
  int k_degree = static_cast<int>(std::count_if(td.edges.begin(), td.edges.end(),
                                                [](const auto& e) { return e.first == 0 || e.second == 0; }));
  if (k_degree > 1) {
    td.edges.emplace_back(0, static_cast<int>(td.bags.size()));
    td.bags.push_back(k);
  }
  return out;
}

int degeneracy(const Graph& g) {
  VertexSet alive = g.vertices();
  int best = 0;
  while (!alive.empty()) {
    int pick = -1;
    int pick_degree = 0;
    for (int v : alive) {
      int d = (g.neighbors(v) & alive).size();
      if (pick < 0 || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    best = std::max(best, pick_degree);
    alive.erase(pick);
  }
  return best;
}

namespace {

int polyspace_connected(const Graph& g, const PolySpaceConfig& cfg, PolySpaceStats& stats) {
  const int n = g.n();
  int best = n - 1;  // one bag holding everything
  const int lower = cfg.stop_at_lower_bound ? degeneracy(g) : -1;
  if (best <= lower) return best;
  bool done = false;

  // Branch A: PMCs whose largest component has exactly `s` < alpha·n
  // vertices, found through representations with |N[C_u]| <= n - s.
  const int small_limit = ceil_fraction(cfg.alpha_split, n);
  for (int s = 1; s < small_limit && !done; ++s) {
    stream_represented_pmcs(
        g, n - s, [s](int largest) { return largest == s; },
        [&](const PotentialMaximalClique& p, int depth) {
          ++stats.branch_a_candidates;
          best = std::min(best, completed_width(g, p.set, best, &stats, depth));
          done = best <= lower;
          return !done;
        },
        &stats);
  }
  if (done) return best;

  // Branch B: separators S with |S| <= sep_cap·n and two full components of
  // at least alpha·n vertices, reached from the smaller such component.
  const int large = std::max(1, ceil_fraction(cfg.alpha_split, n));
  ConnectedSetLimits limits;
  limits.min_size = large;
  limits.max_size = std::max(1, n / 2);
  limits.max_boundary = floor_fraction(cfg.sep_cap_fraction, n);
  limits.viable = [n](int size, int boundary_lb) { return 2 * size + boundary_lb <= n; };
  MultiRootStream stream(g, std::move(limits));
  while (auto rec = stream.next()) {
    const VertexSet& sep = rec->boundary;
    if (sep.empty()) continue;
    std::vector<VertexSet> big;
    for (auto& c : full_components(g, sep)) {
      if (c.size() >= large) big.push_back(c);
    }
    if (big.size() < 2) continue;
    auto smallest = std::min_element(big.begin(), big.end(), [](const VertexSet& a, const VertexSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (*smallest != rec->set) continue;
    ++stats.branch_b_candidates;
    best = std::min(best, completed_width(g, sep, best, &stats, stream.max_depth()));
    if (best <= lower) break;
  }
  stats.max_enumeration_depth = std::max(stats.max_enumeration_depth, stream.max_depth());
  return best;
}

}  // namespace

PolySpaceResult polyspace_treewidth(const Graph& g, const PolySpaceConfig& config) {
  config.validate();
  PolySpaceResult out;
  for (const auto& comp : connected_components(g, VertexSet{})) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    out.width = std::max(out.width, polyspace_connected(sub.graph, config, out.stats));
  }
  return out;
}

}  // namespace pmctw
