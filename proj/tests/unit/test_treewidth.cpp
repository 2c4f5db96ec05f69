#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pmctw/generators.hpp"
#include "pmctw/graph_io.hpp"
#include "pmctw/oracles.hpp"
#include "pmctw/pmc.hpp"
#include "pmctw/separators.hpp"
#include "pmctw/tree_decomposition.hpp"
#include "pmctw/treewidth_dp.hpp"

using namespace pmctw;
using pmctw::testing::S;

namespace {

void expect_solution(const Graph& g, const TreewidthSolution& sol) {
  EXPECT_EQ(check_decomposition(g, sol.decomposition), std::nullopt);
  EXPECT_EQ(sol.decomposition.width(), sol.width);
  EXPECT_EQ(check_triangulation(g, sol.triangulation, sol.width), std::nullopt);
}

}  // namespace

TEST(Decomposition, SingleBagIsValid) {
  Graph g = gen::erdos_renyi(8, 0.5, 1);
  TreeDecomposition td{{VertexSet::range(8)}, {}};
  EXPECT_TRUE(validate_decomposition(g, td));
  EXPECT_EQ(td.width(), 7);
}

TEST(Decomposition, DetectsViolations) {
  Graph p3 = gen::path(3);
  TreeDecomposition missing_edge{{S({0}), S({1, 2})}, {{0, 1}}};
  EXPECT_TRUE(check_decomposition(p3, missing_edge).has_value());
  TreeDecomposition missing_vertex{{S({0, 1})}, {}};
  EXPECT_TRUE(check_decomposition(p3, missing_vertex).has_value());
  TreeDecomposition broken_subtree{{S({0, 1}), S({2}), S({1, 2})}, {{0, 1}, {1, 2}}};
  EXPECT_TRUE(check_decomposition(p3, broken_subtree).has_value());
  TreeDecomposition not_a_tree{{S({0, 1}), S({1, 2})}, {}};
  EXPECT_TRUE(check_decomposition(p3, not_a_tree).has_value());
  TreeDecomposition cycle{{S({0, 1}), S({1, 2}), S({1})}, {{0, 1}, {1, 2}, {2, 0}}};
  EXPECT_TRUE(check_decomposition(p3, cycle).has_value());
}

TEST(Decomposition, TriangulationCheck) {
  Graph c4 = gen::cycle(4);
  EXPECT_FALSE(validate_triangulation(c4, c4.edges(), 2));
  std::vector<Edge> h = c4.edges();
  h.emplace_back(0, 2);
  EXPECT_TRUE(validate_triangulation(c4, h, 2));
  EXPECT_FALSE(validate_triangulation(c4, h, 1));
}

TEST(Decomposition, TdFormatRoundTrip) {
  Graph g = gen::grid(3, 3);
  auto sol = exact_treewidth(g);
  int n = 0;
  auto back = parse_decomposition(write_decomposition(sol.decomposition, g.n()), &n);
  EXPECT_EQ(n, 9);
  EXPECT_EQ(back.bags, sol.decomposition.bags);
  EXPECT_TRUE(validate_decomposition(g, back));
}

TEST(ExactTreewidth, Examples) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(exact_treewidth(gen::complete(n)).width, n - 1);
  EXPECT_EQ(exact_treewidth(gen::complete(6)).decomposition.bags.size(), 1U);
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(exact_treewidth(gen::random_tree(12, seed)).width, 1);
  EXPECT_EQ(exact_treewidth(gen::cycle(5)).width, 2);
  EXPECT_EQ(exact_treewidth(gen::petersen()).width, 4);
  EXPECT_EQ(exact_treewidth(gen::grid(3, 3)).width, 3);
  EXPECT_EQ(exact_treewidth(gen::grid(4, 4)).width, 4);
  EXPECT_EQ(exact_treewidth(gen::complete_bipartite(3, 4)).width, 3);
}

TEST(ExactTreewidth, EdgeCases) {
  EXPECT_EQ(exact_treewidth(Graph(0)).width, -1);
  EXPECT_EQ(exact_treewidth(Graph(4)).width, 0);
  Graph two_parts(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {3, 5}, {4, 6}});
  auto sol = exact_treewidth(two_parts);
  EXPECT_EQ(sol.width, 3);
  expect_solution(two_parts, sol);
}

TEST(ExactTreewidth, MatchesOracleAndValidates) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen::erdos_renyi(12, 0.1 + 0.01 * static_cast<double>(seed), seed);
    auto sol = exact_treewidth(g);
    EXPECT_EQ(sol.width, oracle::treewidth(g)) << "seed " << seed;
    expect_solution(g, sol);
  }
}

TEST(ExactTreewidth, IncompleteFamiliesAreRejected) {
  Graph c5 = gen::cycle(5);
  auto seps = list_minimal_separators(c5);
  std::vector<PotentialMaximalClique> none;
  EXPECT_THROW(compute_treewidth(c5, seps, none), InconsistentFamiliesError);
}

TEST(DecideTreewidth, Examples) {
  EXPECT_FALSE(decide_treewidth_at_most_k(gen::path(4), 0).has_value());
  auto c5 = decide_treewidth_at_most_k(gen::cycle(5), 2);
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->width, 2);
  expect_solution(gen::cycle(5), *c5);
  EXPECT_FALSE(decide_treewidth_at_most_k(gen::cycle(5), 1).has_value());
  EXPECT_TRUE(decide_treewidth_at_most_k(Graph(3), 0).has_value());
}

TEST(DecideTreewidth, ThresholdMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = gen::erdos_renyi(11, 0.35, seed + 7);
    const int tw = oracle::treewidth(g);
    for (int k = 0; k < g.n(); ++k) {
      auto sol = decide_treewidth_at_most_k(g, k);
      ASSERT_EQ(sol.has_value(), k >= tw) << "seed " << seed << " k " << k;
      if (sol) {
        EXPECT_LE(sol->width, k);
        EXPECT_TRUE(validate_decomposition(g, sol->decomposition));
      }
    }
  }
}

TEST(DecideTreewidth, KScan) {
  int attempts = 0;
  auto sol = treewidth_by_k_scan(gen::petersen(), &attempts);
  EXPECT_EQ(sol.width, 4);
  EXPECT_EQ(attempts, 4);
  EXPECT_TRUE(validate_decomposition(gen::petersen(), sol.decomposition));
}
