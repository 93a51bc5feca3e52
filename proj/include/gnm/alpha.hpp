#pragma once

#include <cstdint>
#include <vector>

#include "gnm/graph.hpp"

namespace gnm {

struct AlphaResult {
  int alpha = 0;
  std::vector<int> witness;  // sorted ascending, |witness| == alpha
  std::uint64_t nodes_explored = 0;
};

struct AlphaOptions {
  std::uint64_t node_budget = 1'000'000'000;
};

// Exact independence number. Runs a bitset branch-and-bound for a maximum
// clique in the complement, with greedy-coloring upper bounds over a
// smallest-last vertex order (ties broken by lowest index). Deterministic,
// node counts included. Throws BudgetExceeded when the search tree grows past
// options.node_budget.
AlphaResult alpha_exact(const Graph& g, AlphaOptions options = {});

// Enumerates every independent set of g. Limited to n <= 26.
AlphaResult alpha_bruteforce(const Graph& g);

inline constexpr int kBruteForceMaxVertices = 26;

}  // namespace gnm
