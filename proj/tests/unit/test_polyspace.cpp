#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pmctw/generators.hpp"
#include "pmctw/oracles.hpp"
#include "pmctw/polyspace.hpp"

using namespace pmctw;
using pmctw::testing::S;

TEST(LeafBag, Examples) {
  auto full = treewidth_leaf_bag(gen::complete(5), VertexSet::range(5));
  EXPECT_EQ(full.width, 4);
  EXPECT_EQ(full.decomposition.bags.size(), 1U);
  EXPECT_EQ(treewidth_leaf_bag(gen::path(4), S({0})).width, 1);
  Graph c5_chord(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  EXPECT_EQ(treewidth_leaf_bag(c5_chord, S({0, 2})).width, 2);
}

TEST(LeafBag, RejectsBadBags) {
  EXPECT_THROW(treewidth_leaf_bag(gen::path(4), VertexSet{}), std::invalid_argument);
  EXPECT_THROW(treewidth_leaf_bag(gen::path(4), S({0, 2})), std::invalid_argument);
}

TEST(LeafBag, MatchesOrderingOracleAndIsLeaf) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen::erdos_renyi(9, 0.4, seed);
    for (int v = 0; v < g.n(); ++v) {
      for (const VertexSet& k : {S({v}), v + 1 < g.n() && g.adjacent(v, v + 1) ? S({v, v + 1}) : S({v})}) {
        auto res = treewidth_leaf_bag(g, k);
        ASSERT_EQ(res.width, oracle::leaf_bag_width(g, k)) << "seed " << seed;
        const auto& td = res.decomposition;
        EXPECT_TRUE(validate_decomposition(g, td));
        EXPECT_EQ(td.width(), res.width);
        int leaf_copies = 0;
        for (std::size_t b = 0; b < td.bags.size(); ++b) {
          if (td.bags[b] != k) continue;
          int degree = 0;
          for (auto [x, y] : td.edges) degree += (x == static_cast<int>(b)) + (y == static_cast<int>(b));
          leaf_copies += degree <= 1;
        }
        EXPECT_GE(leaf_copies, 1);
      }
    }
  }
}

TEST(Polyspace, Examples) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(treewidth_polyspace(gen::complete(n)), n - 1);
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(treewidth_polyspace(gen::random_tree(10, seed)), 1);
  EXPECT_EQ(treewidth_polyspace(gen::petersen()), 4);
  EXPECT_EQ(treewidth_polyspace(gen::grid(3, 3)), 3);
  EXPECT_EQ(treewidth_polyspace(Graph(0)), -1);
  EXPECT_EQ(treewidth_polyspace(Graph(3)), 0);
}

TEST(Polyspace, MatchesOracleWithAndWithoutEarlyStop) {
  PolySpaceConfig full;
  full.stop_at_lower_bound = false;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen::erdos_renyi(10, 0.15 + 0.01 * static_cast<double>(seed), seed);
    const int tw = oracle::treewidth(g);
    EXPECT_EQ(treewidth_polyspace(g), tw) << "seed " << seed;
    auto res = polyspace_treewidth(g, full);
    EXPECT_EQ(res.width, tw) << "seed " << seed;
    EXPECT_LE(res.stats.max_recursion_depth, g.n());
    EXPECT_LE(res.stats.max_enumeration_depth, g.n());
  }
}

TEST(Polyspace, AlphaVariants) {
  Graph g = gen::erdos_renyi(11, 0.35, 3);
  const int tw = oracle::treewidth(g);
  for (double alpha : {0.2, 0.3, 0.42, 0.49}) {
    PolySpaceConfig cfg = PolySpaceConfig::with_alpha(alpha);
    cfg.stop_at_lower_bound = false;
    EXPECT_EQ(treewidth_polyspace(g, cfg), tw) << alpha;
  }
}

TEST(Polyspace, ConfigValidation) {
  EXPECT_NO_THROW(PolySpaceConfig{}.validate());
  EXPECT_THROW(PolySpaceConfig::with_alpha(0.6).validate(), std::invalid_argument);
  PolySpaceConfig bad;
  bad.sep_cap_fraction = 0.5;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Polyspace, Degeneracy) {
  EXPECT_EQ(degeneracy(gen::complete(5)), 4);
  EXPECT_EQ(degeneracy(gen::cycle(7)), 2);
  EXPECT_EQ(degeneracy(gen::random_tree(9, 1)), 1);
  EXPECT_EQ(degeneracy(gen::petersen()), 3);
}
