#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "pmctw/generators.hpp"
#include "pmctw/oracles.hpp"
#include "pmctw/pmc.hpp"
#include "pmctw/polyspace.hpp"
#include "pmctw/separators.hpp"

using namespace pmctw;
using pmctw::testing::S;

namespace {

std::vector<VertexSet> sets_of(const std::vector<PotentialMaximalClique>& pmcs) {
  std::vector<VertexSet> out;
  for (const auto& p : pmcs) out.push_back(p.set);
  return out;
}

}  // namespace

TEST(IsPmc, Examples) {
  EXPECT_TRUE(is_pmc(gen::complete(5), VertexSet::range(5)).has_value());
  Graph p3 = gen::path(3);
  EXPECT_FALSE(is_pmc(p3, S({1})).has_value());
  auto ab = is_pmc(p3, S({0, 1}));
  ASSERT_TRUE(ab.has_value());
  EXPECT_EQ(ab->components, (std::vector<VertexSet>{S({2})}));
  EXPECT_EQ(ab->separators, (std::vector<VertexSet>{S({1})}));
  EXPECT_FALSE(is_pmc(p3, VertexSet{}).has_value());
}

TEST(IsPmc, AgreesWithLiteralCheck) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : gen::connected_catalog(n)) {
      for (unsigned m = 1; m < (1U << n); ++m) {
        VertexSet k;
        for (int v = 0; v < n; ++v) {
          if ((m >> v) & 1U) k.insert(v);
        }
        ASSERT_EQ(is_pmc(g, k).has_value(), oracle::is_pmc_literal(g, k));
      }
    }
  }
}

TEST(NicePmc, PathEdgeIsNotNice) {
  Graph p3 = gen::path(3);
  auto ab = *is_pmc(p3, S({0, 1}));
  EXPECT_FALSE(is_active_separator(p3, ab, S({1})));
  EXPECT_FALSE(is_nice_pmc(p3, ab));
  EXPECT_THROW(is_active_separator(p3, ab, S({0})), std::invalid_argument);
}

TEST(NicePmc, CycleTriangleIsNice) {
  Graph c6 = gen::cycle(6);
  auto tri = *is_pmc(c6, S({0, 2, 4}));
  EXPECT_TRUE(is_nice_pmc(c6, tri));
}

TEST(NicePmc, AgreesWithLiteralDefinitionOnCatalog) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : gen::connected_catalog(n)) {
      auto seps = oracle::minimal_separators(g);
      for (const auto& p : list_pmcs(g)) {
        bool literal = false;
        for (const auto& s : p.distinct_separators()) literal = literal || oracle::is_active_literal(g, p.set, s, seps);
        ASSERT_EQ(is_nice_pmc(g, p), literal);
      }
    }
  }
}

TEST(NicePmc, EnumerationMatchesOracle) {
  EXPECT_EQ(sets_of(nice_pmcs(gen::cycle(5))), oracle::nice_pmcs(gen::cycle(5)));
  EXPECT_EQ(sets_of(nice_pmcs(gen::complete(5))), oracle::nice_pmcs(gen::complete(5)));
  EXPECT_TRUE(nice_pmcs(gen::cycle(5), 1).empty());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gen::erdos_renyi(11, 0.3, seed);
    EXPECT_EQ(sets_of(nice_pmcs(g)), oracle::nice_pmcs(g)) << "seed " << seed;
  }
}

TEST(VertexRepresentation, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen::erdos_renyi(10, 0.35, seed);
    for (const auto& p : list_pmcs(g)) {
      for (int v : p.set) {
        auto rep = vertex_representation(g, p.set, v);
        EXPECT_TRUE(rep.component.contains(v));
        EXPECT_TRUE(is_connected_set(g, rep.component));
        EXPECT_EQ(reconstruct_from_representation(g, rep), p.set);
      }
    }
  }
  EXPECT_THROW(vertex_representation(gen::path(3), S({0, 1}), 2), std::invalid_argument);
}

TEST(ListPmcs, Examples) {
  EXPECT_EQ(sets_of(list_pmcs(gen::complete(3))), (std::vector<VertexSet>{S({0, 1, 2})}));
  EXPECT_EQ(sets_of(list_pmcs(gen::path(4))), (std::vector<VertexSet>{S({0, 1}), S({1, 2}), S({2, 3})}));
  EXPECT_EQ(sets_of(list_pmcs(gen::cycle(5))), oracle::pmcs(gen::cycle(5)));
  EXPECT_EQ(sets_of(list_pmcs(Graph(3))), (std::vector<VertexSet>{S({0}), S({1}), S({2})}));
}

TEST(ListPmcs, EveryPrefixMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = gen::erdos_renyi(10, 0.2 + 0.02 * static_cast<double>(seed), seed);
    int prefixes = 0;
    list_pmcs(g, std::nullopt, [&](const Graph& prefix, std::span<const int>, std::span<const VertexSet> family) {
      ++prefixes;
      std::vector<VertexSet> got(family.begin(), family.end());
      EXPECT_EQ(got, oracle::pmcs(prefix)) << "seed " << seed << " prefix " << prefix.n();
    });
    EXPECT_EQ(prefixes, g.n());
  }
}

TEST(ListPmcs, CappedMatchesFilteredOracle) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = gen::erdos_renyi(11, 0.3, seed + 50);
    auto truth = oracle::pmcs(g);
    for (int k = 1; k <= g.n(); ++k) {
      std::vector<VertexSet> expected;
      for (const auto& s : truth) {
        if (s.size() <= k) expected.push_back(s);
      }
      EXPECT_EQ(sets_of(list_pmcs(g, k)), expected) << "seed " << seed << " k " << k;
    }
  }
}

TEST(ListPmcs, VertexOrderAscendingDegree) {
  Graph star = gen::star(4);
  auto order = pmc_vertex_order(star);
  EXPECT_EQ(order.back(), 0);
}

TEST(LargeComponentPmcs, MatchesFilteredListing) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen::erdos_renyi(10, 0.3, seed);
    for (double alpha : {0.05, 0.2, 1.0 / 3.0, 0.5}) {
      const int threshold = static_cast<int>(std::ceil(alpha * g.n() - 1e-9));
      std::vector<VertexSet> expected;
      for (const auto& p : list_pmcs(g)) {
        int largest = 0;
        for (const auto& c : p.components) largest = std::max(largest, c.size());
        if (largest >= threshold && largest > 0) expected.push_back(p.set);
      }
      std::vector<VertexSet> got;
      list_pmcs_large_component(g, alpha, [&](const PotentialMaximalClique& p) { got.push_back(p.set); });
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected) << "seed " << seed << " alpha " << alpha;
    }
  }
}

TEST(LargeComponentPmcs, ThresholdAboveSizeIsEmpty) {
  std::vector<VertexSet> got;
  list_pmcs_large_component(gen::cycle(6), 0.99, [&](const PotentialMaximalClique& p) { got.push_back(p.set); });
  EXPECT_TRUE(got.empty());
}

TEST(LargeComponentPmcs, CycleThird) {
  Graph c6 = gen::cycle(6);
  std::vector<VertexSet> expected;
  for (const auto& s : oracle::pmcs(c6)) {
    int largest = 0;
    for (const auto& c : connected_components(c6, s)) largest = std::max(largest, c.size());
    if (largest >= 2) expected.push_back(s);
  }
  std::vector<VertexSet> got;
  list_pmcs_large_component(c6, 1.0 / 3.0, [&](const PotentialMaximalClique& p) { got.push_back(p.set); });
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}
