#include "gnm/sampling.hpp"

#include <string>
#include <unordered_map>

#include "gnm/errors.hpp"

namespace gnm {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability " + std::to_string(p) + " is outside [0,1]");
}

std::uint64_t pair_count(std::int64_t n) {
  return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
}

}  // namespace

std::vector<std::uint64_t> sample_distinct(std::uint64_t population, std::uint64_t m, CounterRng& rng) {
  if (m > population) throw InputError("cannot draw more distinct values than the population holds");
  std::vector<std::uint64_t> out;
  out.reserve(m);
  std::unordered_map<std::uint64_t, std::uint64_t> swapped;
  swapped.reserve(2 * m);
  auto value_at = [&](std::uint64_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + rng.below(population - i);
    const std::uint64_t vj = value_at(j);
    swapped[j] = value_at(i);
    out.push_back(vj);
  }
  return out;
}

std::vector<Edge> sample_gnm_edges(std::int64_t n, std::int64_t m, SeedSpec seed) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  const std::uint64_t total = pair_count(n);
  if (m < 0 || static_cast<std::uint64_t>(m) > total)
    throw InputError("edge count " + std::to_string(m) + " outside 0.." + std::to_string(total));
  CounterRng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t idx : sample_distinct(total, static_cast<std::uint64_t>(m), rng))
    edges.push_back(pair_from_index(idx));
  return edges;
}

Graph sample_gnm(int n, std::int64_t m, SeedSpec seed) {
  const auto edges = sample_gnm_edges(n, m, seed);
  return make_graph(n, edges);
}

Graph sample_gnp(int n, double p, SeedSpec seed) {
  check_probability(p);
  CounterRng rng(seed);
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng.uniform() < p) b.add_edge(u, v);
  return std::move(b).build();
}

BipartiteMatrix sample_bipartite_p(int beta, int gamma, double p, SeedSpec seed) {
  check_probability(p);
  CounterRng rng(seed);
  BipartiteMatrix b(beta, gamma);
  for (int r = 0; r < beta; ++r)
    for (int c = 0; c < gamma; ++c)
      if (rng.uniform() < p) b.set(r, c);
  return b;
}

BipartiteMatrix sample_bipartite_fixed(int beta, int gamma, std::int64_t kappa, SeedSpec seed) {
  BipartiteMatrix b(beta, gamma);
  const auto cells = static_cast<std::uint64_t>(beta) * static_cast<std::uint64_t>(gamma);
  if (kappa < 0 || static_cast<std::uint64_t>(kappa) > cells)
    throw InputError("ones count " + std::to_string(kappa) + " outside 0.." + std::to_string(cells));
  CounterRng rng(seed);
  for (std::uint64_t idx : sample_distinct(cells, static_cast<std::uint64_t>(kappa), rng))
    b.set(static_cast<int>(idx / static_cast<std::uint64_t>(gamma)), static_cast<int>(idx % static_cast<std::uint64_t>(gamma)));
  return b;
}

}  // namespace gnm
