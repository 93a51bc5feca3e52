#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Slow, independent reference computations. Each one enumerates its whole
// probability space, so they only run on tiny instances.
namespace gnm::oracle {

// Number of beta x gamma 0-1 matrices with every row sum >= 2, indexed by the
// number of ones. Scans all 2^(beta*gamma) matrices; beta*gamma <= 24.
std::vector<std::uint64_t> min2_counts_bruteforce(int beta, int gamma);

// C(beta, gamma, kappa) from the row recursion
//   C(b, g, k) = sum_{d=2}^{g} C(g, d) C(b - 1, g, k - d),
// evaluated top-down with memoization. Decimal string.
std::string min2_count_recursive(int beta, int gamma, int kappa);

// Exact E[X_{k,r}] in G(n, m) for every m, from all 2^C(n,2) graphs. By
// symmetry E[X] = N(k, r) * P(one fixed pair (K, M) is counted), and the
// probability is the fraction of graphs with m edges in which the fixed pair
// passes the X test. n <= 8.
struct MomentTable {
  int n = 0;
  int k = 0;
  int r = 0;
  std::vector<std::uint64_t> graphs;  // graphs with m edges, index m
  std::vector<std::uint64_t> pair_u;  // of those, the fixed pair passes U
  std::vector<std::uint64_t> pair_x;  // of those, the fixed pair passes X
  std::vector<double> expectation;    // N(k, r) * pair_x / graphs
};
MomentTable exact_x_moments(int n, int k, int r);

// E[X_{k,r}] by summing over every (K, M) pair in every graph. Quadratically
// slower than exact_x_moments; used to confirm the symmetry argument on n <= 6.
std::vector<double> exact_x_moments_full(int n, int k, int r);

// P(H >= x) and P(H <= x) for H hypergeometric: b draws without replacement
// from a population of a with c marked. Exact rational arithmetic.
double hyper_upper_tail(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x);
double hyper_lower_tail(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x);

// Largest P(X = 0) over every exceptional set T of size t, where X counts the
// vertices outside T with degree <= 1 in G(N, N, p). Sums over all 2^(N^2)
// bipartite graphs; N <= 4.
double janson_exact_no_low_degree(int N, int t, double p);

}  // namespace gnm::oracle
