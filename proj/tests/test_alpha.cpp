#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "gnm/alpha.hpp"
#include "gnm/errors.hpp"
#include "gnm/graph.hpp"
#include "gnm/sampling.hpp"

using namespace gnm;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return make_graph(10, e);
}

// Maximum clique of g by subset enumeration, independent of both solvers.
int max_clique_bruteforce(const Graph& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << g.n()); ++s) {
    bool clique = true;
    for (int u = 0; u < g.n() && clique; ++u)
      for (int v = u + 1; v < g.n() && clique; ++v)
        if ((s >> u & 1U) && (s >> v & 1U) && !g.adjacent(u, v)) clique = false;
    if (clique) best = std::max(best, std::popcount(s));
  }
  return best;
}

void expect_valid(const Graph& g, const AlphaResult& r) {
  EXPECT_EQ(static_cast<int>(r.witness.size()), r.alpha);
  EXPECT_TRUE(is_independent(g, r.witness));
}

}  // namespace

TEST(AlphaExact, Examples) {
  EXPECT_EQ(alpha_exact(Graph(5)).alpha, 5);
  EXPECT_EQ(alpha_exact(complete_graph(5)).alpha, 1);
  EXPECT_EQ(alpha_exact(cycle_graph(5)).alpha, 2);
  EXPECT_EQ(alpha_exact(petersen()).alpha, 4);
  EXPECT_EQ(alpha_exact(Graph(0)).alpha, 0);
  for (const Graph& g : {Graph(5), complete_graph(5), cycle_graph(5), petersen()}) expect_valid(g, alpha_exact(g));
}

TEST(AlphaBruteforce, Examples) {
  EXPECT_EQ(alpha_bruteforce(path_graph(4)).alpha, 2);
  std::vector<Edge> k33;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) k33.emplace_back(u, v);
  EXPECT_EQ(alpha_bruteforce(make_graph(6, k33)).alpha, 3);
  const std::vector<Edge> two_triangles = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  EXPECT_EQ(alpha_bruteforce(make_graph(6, two_triangles)).alpha, 2);
  EXPECT_EQ(alpha_bruteforce(cycle_graph(5)).alpha, 2);
  EXPECT_EQ(alpha_bruteforce(petersen()).alpha, 4);
  EXPECT_THROW(alpha_bruteforce(Graph(27)), InputError);
}

TEST(AlphaExact, MatchesBruteforceOnAllSixVertexGraphs) {
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
    const Graph g = graph_from_pair_mask(6, mask);
    const AlphaResult r = alpha_exact(g);
    ASSERT_EQ(r.alpha, alpha_bruteforce(g).alpha) << "mask " << mask;
    expect_valid(g, r);
  }
}

TEST(AlphaExact, MatchesBruteforceOnRandomGraphs) {
  for (std::uint64_t t = 0; t < 2000; ++t) {
    const int n = 7 + static_cast<int>(t % 10);
    const Graph g = sample_gnp(n, 0.1 + 0.8 * static_cast<double>(t % 17) / 16, {31, t});
    const AlphaResult r = alpha_exact(g);
    ASSERT_EQ(r.alpha, alpha_bruteforce(g).alpha) << "trial " << t;
    expect_valid(g, r);
  }
}

TEST(AlphaExact, AddingAnEdgeNeverIncreasesAlpha) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Graph g = sample_gnm(14, 25, {8, t});
    const int before = alpha_exact(g).alpha;
    std::vector<Edge> edges = g.edges();
    const Graph comp = complement(g);
    const auto missing = comp.edges();
    if (missing.empty()) continue;
    edges.push_back(missing[t % missing.size()]);
    EXPECT_LE(alpha_exact(make_graph(14, edges)).alpha, before);
  }
}

TEST(AlphaExact, ComplementDuality) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    const Graph g = sample_gnp(3 + static_cast<int>(t % 8), 0.5, {17, t});
    EXPECT_EQ(alpha_exact(g).alpha, max_clique_bruteforce(complement(g)));
  }
}

TEST(AlphaExact, Deterministic) {
  const Graph g = sample_gnm(80, 300, {5, 5});
  const AlphaResult a = alpha_exact(g);
  const AlphaResult b = alpha_exact(g);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(AlphaExact, BudgetExceededCarriesLowerBound) {
  const Graph g = sample_gnm(120, 500, {5, 1});
  try {
    alpha_exact(g, {3});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 3U);
    EXPECT_GT(e.best_bound(), 0);
    EXPECT_TRUE(is_independent(g, e.best_found()));
    EXPECT_LE(e.best_bound(), alpha_exact(g).alpha);
  }
}

TEST(AlphaExact, DeskScaleGraph) {
  // n = 100 at m = ceil(n^1.3) solves quickly.
  const Graph g = sample_gnm(100, 399, {0, 0});
  const AlphaResult r = alpha_exact(g);
  expect_valid(g, r);
  EXPECT_GT(r.alpha, 25);
}
