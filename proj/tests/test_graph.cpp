#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "gnm/errors.hpp"
#include "gnm/graph.hpp"
#include "gnm/random.hpp"
#include "gnm/sampling.hpp"

using namespace gnm;

TEST(Random, PhiloxKnownAnswers) {
  // Published Philox2x64-10 test vectors.
  EXPECT_EQ(philox2x64(0, 0, 0), (std::array<std::uint64_t, 2>{0xca00a0459843d731ULL, 0x66c24222c9a845b5ULL}));
  EXPECT_EQ(philox2x64(~0ULL, ~0ULL, ~0ULL), (std::array<std::uint64_t, 2>{0x65b021d60cd8310fULL, 0x4d02f3222f86df20ULL}));
  EXPECT_EQ(philox2x64(0xa4093822299f31d0ULL, 0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL),
            (std::array<std::uint64_t, 2>{0x0a5e742c2997341cULL, 0xb0f883d38000de5dULL}));
}

TEST(Random, StreamIsPureFunction) {
  CounterRng a({7, 3});
  for (std::uint64_t i = 0; i < 10; ++i) EXPECT_EQ(a.next_u64(), random_word(7, 3, i));
  CounterRng b({7, 4});
  EXPECT_NE(CounterRng({7, 3}).next_u64(), b.next_u64());
}

TEST(Random, BelowIsInRangeAndRoughlyUniform) {
  CounterRng rng({1, 0});
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7U);
    ++hist[v];
  }
  for (int h : hist) EXPECT_NEAR(h, 10000, 4 * std::sqrt(10000 * 6.0 / 7));
}

TEST(MakeGraph, Path) {
  const std::vector<Edge> e = {{0, 1}, {1, 2}};
  const Graph g = make_graph(3, e);
  EXPECT_EQ(g.m(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_TRUE(g.invariants_hold());
}

TEST(MakeGraph, CompleteFive) {
  std::vector<Edge> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  const Graph g = make_graph(5, e);
  EXPECT_EQ(g.m(), 10);
  EXPECT_EQ(g, complete_graph(5));
}

TEST(MakeGraph, Deduplicates) {
  const std::vector<Edge> e = {{0, 1}, {0, 1}, {1, 0}};
  EXPECT_EQ(make_graph(4, e).m(), 1);
}

TEST(MakeGraph, Errors) {
  const std::vector<Edge> out_of_range = {{0, 4}};
  const std::vector<Edge> loop = {{2, 2}};
  const std::vector<Edge> negative = {{-1, 2}};
  EXPECT_THROW(make_graph(4, out_of_range), InputError);
  EXPECT_THROW(make_graph(4, loop), InputError);
  EXPECT_THROW(make_graph(4, negative), InputError);
}

TEST(SampleGnm, ForcedCases) {
  EXPECT_EQ(sample_gnm(5, 10, {3, 1}), complete_graph(5));
  EXPECT_EQ(sample_gnm(5, 0, {3, 1}).m(), 0);
  EXPECT_THROW(sample_gnm(5, 11, {3, 1}), InputError);
  EXPECT_THROW(sample_gnm(5, -1, {3, 1}), InputError);
}

TEST(SampleGnm, Deterministic) {
  EXPECT_EQ(sample_gnm(6, 9, {11, 2}), sample_gnm(6, 9, {11, 2}));
  const Graph g = sample_gnm(6, 9, {11, 2});
  EXPECT_EQ(g.m(), 9);
  EXPECT_TRUE(g.invariants_hold());
}

TEST(SampleGnm, UniformOnFourVertices) {
  // Each of the C(6,2) = 15 graphs with two edges is equally likely.
  const int trials = 60000;
  std::map<std::vector<Edge>, int> freq;
  for (int t = 0; t < trials; ++t) ++freq[sample_gnm(4, 2, {2024, static_cast<std::uint64_t>(t)}).edges()];
  ASSERT_EQ(freq.size(), 15U);
  const double p = 1.0 / 15;
  const double sigma = std::sqrt(trials * p * (1 - p));
  for (const auto& [edges, count] : freq) EXPECT_NEAR(count, trials * p, 4 * sigma);
}

TEST(SampleGnm, EdgeListMatchesGraph) {
  const auto edges = sample_gnm_edges(30, 50, {5, 5});
  EXPECT_EQ(make_graph(30, edges), sample_gnm(30, 50, {5, 5}));
}

TEST(SampleGnm, LargePopulationUsesLittleMemory) {
  // C(10^6, 2) pairs; only m of them are touched.
  const auto edges = sample_gnm_edges(1000000, 1000, {1, 0});
  EXPECT_EQ(edges.size(), 1000U);
  std::set<Edge> distinct(edges.begin(), edges.end());
  EXPECT_EQ(distinct.size(), 1000U);
}

TEST(SampleGnp, ForcedAndErrors) {
  EXPECT_EQ(sample_gnp(4, 0.0, {1, 1}).m(), 0);
  EXPECT_EQ(sample_gnp(4, 1.0, {1, 1}), complete_graph(4));
  EXPECT_THROW(sample_gnp(4, 1.5, {1, 1}), InputError);
  EXPECT_THROW(sample_gnp(4, -0.1, {1, 1}), InputError);
}

TEST(SampleGnp, MeanEdgeCount) {
  const double p = 0.01;
  const double pairs = 1000.0 * 999 / 2;
  double total = 0;
  for (int t = 0; t < 100; ++t) total += static_cast<double>(sample_gnp(1000, p, {9, static_cast<std::uint64_t>(t)}).m());
  const double sigma_of_mean = std::sqrt(pairs * p * (1 - p) / 100);
  EXPECT_NEAR(total / 100, pairs * p, 3 * sigma_of_mean);
}

TEST(SampleBipartite, ProbabilityForcedCases) {
  const BipartiteMatrix ones = sample_bipartite_p(3, 3, 1.0, {1, 2});
  EXPECT_EQ(ones.kappa(), 9);
  EXPECT_EQ(sample_bipartite_p(2, 5, 0.0, {1, 2}).kappa(), 0);
  EXPECT_THROW(sample_bipartite_p(2, 5, 2.0, {1, 2}), InputError);
}

TEST(SampleBipartite, ProbabilityMean) {
  double total = 0;
  for (int t = 0; t < 50; ++t) {
    const BipartiteMatrix b = sample_bipartite_p(500, 500, 0.5, {4, static_cast<std::uint64_t>(t)});
    ASSERT_TRUE(b.invariants_hold());
    total += static_cast<double>(b.kappa());
  }
  EXPECT_NEAR(total / 50, 125000, 3 * std::sqrt(250000 * 0.25 / 50));
}

TEST(SampleBipartite, FixedForcedCases) {
  EXPECT_EQ(sample_bipartite_fixed(2, 3, 6, {1, 1}).kappa(), 6);
  EXPECT_EQ(sample_bipartite_fixed(2, 3, 0, {1, 1}).kappa(), 0);
  EXPECT_THROW(sample_bipartite_fixed(2, 3, 7, {1, 1}), InputError);
}

TEST(SampleBipartite, FixedIsUniform) {
  const int trials = 30000;
  std::map<std::vector<std::pair<int, int>>, int> freq;
  for (int t = 0; t < trials; ++t) {
    const BipartiteMatrix b = sample_bipartite_fixed(2, 2, 2, {77, static_cast<std::uint64_t>(t)});
    ASSERT_EQ(b.kappa(), 2);
    ++freq[b.ones()];
  }
  ASSERT_EQ(freq.size(), 6U);
  const double p = 1.0 / 6;
  for (const auto& [cells, count] : freq) EXPECT_NEAR(count, trials * p, 3 * std::sqrt(trials * p * (1 - p)));
}

TEST(InducedSubgraph, Examples) {
  const std::vector<int> first3 = {0, 1, 2};
  EXPECT_EQ(induced_subgraph(complete_graph(5), first3), complete_graph(3));
  const std::vector<int> ends = {0, 2};
  EXPECT_EQ(induced_subgraph(path_graph(3), ends).m(), 0);
  EXPECT_EQ(induced_subgraph(cycle_graph(5), first3), path_graph(3));
  const std::vector<int> bad = {0, 9};
  EXPECT_THROW(induced_subgraph(path_graph(3), bad), InputError);
}

TEST(InducedSubgraph, AllVerticesIsIdentity) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    const Graph g = sample_gnm(12, 20, {3, t});
    std::vector<int> all(12);
    for (int i = 0; i < 12; ++i) all[i] = i;
    EXPECT_EQ(induced_subgraph(g, all), g);
  }
}

TEST(GraphText, RoundTrip) {
  const Graph g = sample_gnm(9, 13, {1, 2});
  std::stringstream s;
  write_graph(s, g);
  EXPECT_EQ(read_graph(s), g);
  std::stringstream bad("3 2\n0 1\n");
  EXPECT_THROW(read_graph(bad), InputError);
}

TEST(MatrixText, RoundTrip) {
  const BipartiteMatrix b = sample_bipartite_fixed(4, 5, 7, {1, 2});
  std::stringstream s;
  write_matrix(s, b);
  EXPECT_EQ(read_matrix(s), b);
}

TEST(PairIndex, Colex) {
  EXPECT_EQ(pair_index(0, 1), 0U);
  EXPECT_EQ(pair_index(0, 2), 1U);
  EXPECT_EQ(pair_index(1, 2), 2U);
  EXPECT_EQ(pair_index(0, 3), 3U);
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const auto [u, v] = pair_from_index(i);
    EXPECT_EQ(pair_index(static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)), i);
  }
}
