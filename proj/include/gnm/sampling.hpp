#pragma once

#include <cstdint>
#include <vector>

#include "gnm/graph.hpp"
#include "gnm/random.hpp"

namespace gnm {

// m distinct values from [0, population), uniformly among all m-subsets, in
// draw order. Partial Fisher-Yates over a virtual identity array backed by a
// sparse map, so memory is O(m) regardless of population.
std::vector<std::uint64_t> sample_distinct(std::uint64_t population, std::uint64_t m, CounterRng& rng);

// Uniform over all graphs on n labeled vertices with exactly m edges.
Graph sample_gnm(int n, std::int64_t m, SeedSpec seed);
// Same draw as sample_gnm, returned as an edge list; usable when n is too
// large for dense adjacency rows.
std::vector<Edge> sample_gnm_edges(std::int64_t n, std::int64_t m, SeedSpec seed);

// Each pair present independently with probability p.
Graph sample_gnp(int n, double p, SeedSpec seed);

// Each cell independently 1 with probability p.
BipartiteMatrix sample_bipartite_p(int beta, int gamma, double p, SeedSpec seed);
// Uniform over beta x gamma matrices with exactly kappa ones.
BipartiteMatrix sample_bipartite_fixed(int beta, int gamma, std::int64_t kappa, SeedSpec seed);

}  // namespace gnm
