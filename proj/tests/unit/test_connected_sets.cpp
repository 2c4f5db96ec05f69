#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pmctw/connected_sets.hpp"
#include "pmctw/generators.hpp"
#include "pmctw/oracles.hpp"

using namespace pmctw;
using pmctw::testing::S;
using pmctw::testing::sorted;

namespace {

std::vector<VertexSet> collect(ConnectedSetStream stream) {
  std::vector<VertexSet> out;
  drain(stream, [&](const ConnectedSetRecord& r) { out.push_back(r.set); });
  return sorted(out);
}

}  // namespace

TEST(ConnectedSets, PathExample) {
  Graph p5 = gen::path(5);
  EXPECT_EQ(collect(enumerate_rooted(p5, 2, 1, 2)), (std::vector<VertexSet>{S({1, 2}), S({2, 3})}));
  EXPECT_LE(BigInt(2), count_bound(1, 2));
}

TEST(ConnectedSets, SingletonCase) {
  Graph g = gen::erdos_renyi(9, 0.5, 11);
  for (int v = 0; v < g.n(); ++v) {
    EXPECT_EQ(collect(enumerate_rooted(g, v, 0, g.degree(v))), (std::vector<VertexSet>{S({v})}));
  }
}

TEST(ConnectedSets, CompleteGraphEdges) {
  Graph k4 = gen::complete(4);
  auto stream = enumerate_rooted(k4, 0, 1, 2);
  std::vector<ConnectedSetRecord> recs;
  drain(stream, [&](const ConnectedSetRecord& r) { recs.push_back(r); });
  ASSERT_EQ(recs.size(), 3U);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.set.contains(0));
    EXPECT_EQ(r.boundary, VertexSet::range(4) - r.set);
  }
}

TEST(ConnectedSets, InfeasibleParametersGiveEmptyStream) {
  Graph c5 = gen::cycle(5);
  EXPECT_TRUE(collect(enumerate_rooted(c5, 0, 5, 0)).empty());
  EXPECT_TRUE(collect(enumerate_rooted(c5, 0, 1, 1)).empty());
}

TEST(ConnectedSets, NegativeBudgetsThrow) {
  Graph c5 = gen::cycle(5);
  EXPECT_THROW(enumerate_rooted(c5, 0, -1, 2), std::invalid_argument);
  EXPECT_THROW(enumerate_all(c5, 1, -1), std::invalid_argument);
}

TEST(ConnectedSets, GlobalCycleBudget) {
  Graph c5 = gen::cycle(5);
  auto stream = enumerate_all(c5, 1, 2);
  std::vector<ConnectedSetRecord> recs;
  drain(stream, [&](const ConnectedSetRecord& r) { recs.push_back(r); });
  EXPECT_EQ(recs.size(), 10U);
}

TEST(ConnectedSets, ZeroBoundaryGivesComponents) {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  auto stream = enumerate_all(g, 5, 0);
  std::vector<VertexSet> sets;
  drain(stream, [&](const ConnectedSetRecord& r) { sets.push_back(r.set); });
  EXPECT_EQ(sorted(sets), (std::vector<VertexSet>{S({0, 1, 2}), S({3, 4}), S({5})}));
}

TEST(ConnectedSets, GlobalEqualsOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen::erdos_renyi(10, 0.3, seed);
    auto stream = enumerate_all(g, g.n() - 1, g.n());
    std::vector<VertexSet> sets;
    drain(stream, [&](const ConnectedSetRecord& r) { sets.push_back(r.set); });
    EXPECT_EQ(sorted(sets), oracle::all_connected_sets(g)) << "seed " << seed;
  }
}

TEST(ConnectedSets, RootedEqualsOracleAndRespectsBound) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = gen::erdos_renyi(9, 0.35, seed + 100);
    for (int v = 0; v < g.n(); ++v) {
      for (int b = 0; b < g.n(); ++b) {
        for (int f = 0; b + f + 1 <= g.n(); ++f) {
          auto got = collect(enumerate_rooted(g, v, b, f));
          EXPECT_EQ(got, oracle::connected_sets(g, v, b, f));
          EXPECT_LE(BigInt(got.size()), count_bound(b, f));
        }
      }
    }
  }
}

TEST(ConnectedSets, AtMostModeIsUnionOfExact) {
  Graph g = gen::grid(3, 3);
  for (int b = 0; b < 9; ++b) {
    for (int f = 0; f <= 5; ++f) {
      std::vector<VertexSet> expected;
      for (int g_f = 0; g_f <= f; ++g_f) {
        auto part = oracle::connected_sets(g, 4, b, g_f);
        expected.insert(expected.end(), part.begin(), part.end());
      }
      EXPECT_EQ(collect(enumerate_rooted(g, 4, b, f, BoundaryMode::at_most)), sorted(expected));
    }
  }
}

TEST(ConnectedSets, StreamDepthBounded) {
  Graph g = gen::grid(3, 4);
  auto stream = enumerate_rooted(g, 0, 6, 4, BoundaryMode::at_most);
  drain(stream, [](const ConnectedSetRecord&) {});
  EXPECT_LE(stream.max_depth(), g.n());
}

TEST(ConnectedSets, RootFreeQueryDeduplicates) {
  Graph c6 = gen::cycle(6);
  auto recs = run_query(c6, {std::nullopt, 2, 2, BoundaryMode::exact});
  EXPECT_EQ(recs.size(), 6U);
}

TEST(CountBound, Binomials) {
  EXPECT_EQ(count_bound(0, 5), BigInt(1));
  EXPECT_EQ(count_bound(3, 2), BigInt(10));
  EXPECT_EQ(count_bound(2, 2), BigInt(6));
  EXPECT_EQ(count_bound(100, 100).str(), "90548514656103281165404177077484163874504589675413336841320");
}
