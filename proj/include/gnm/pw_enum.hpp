#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gnm/lognum.hpp"
#include "gnm/random.hpp"

namespace gnm {

// Truncated Poisson: P(chi = j) = lambda^j / (j! (e^lambda - lambda - 1)), j >= 2.
double trunc_pmf(double lambda, std::int64_t j);
double trunc_mean(double lambda);

// lambda with trunc_mean(lambda) = c, by bisection. Requires c > 2.
double solve_lambda_c(double c);

// lambda_c e^{lambda_c} / (e^{lambda_c} - 1).
double eta_bar(double c);

enum class EnumMode { exact_int, log_float };
const char* to_string(EnumMode mode);

struct EnumOptions {
  // Exact big-integer DP runs while beta * gamma * kappa stays within this.
  std::uint64_t exact_budget = 4'000'000;
};

struct EnumResult {
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t kappa = 0;
  LogNumber count;                   // C(beta, gamma, kappa)
  LogNumber f;                       // count / C(beta gamma, kappa)
  EnumMode mode = EnumMode::exact_int;
  std::optional<std::string> exact;  // decimal count, exact mode only

  double c() const { return beta > 0 ? static_cast<double>(kappa) / static_cast<double>(beta) : 0.0; }
};

// Number of beta x gamma 0-1 matrices with kappa ones and every row sum >= 2:
// the x^kappa coefficient of (sum_{d>=2} C(gamma, d) x^d)^beta.
EnumResult count_min2_matrices(std::int64_t beta, std::int64_t gamma, std::int64_t kappa, EnumOptions options = {});

struct MainTerm {
  long double log_value = 0;  // beta ln(1 - (c+1) e^{-c})
  double value = 0;
  double secondary = 0;       // e^{-2c}
};
// (1 - (c+1) e^{-c})^beta with c = kappa / beta. Requires kappa >= 2 beta.
MainTerm f_main_term(std::int64_t beta, std::int64_t kappa);

struct SumProb {
  double value = 0;
  double discarded_mass = 0;  // upper bound on the probability lost to truncation
};
// P(chi_1 + ... + chi_beta = kappa) for iid truncated Poisson(lambda), by
// convolution of the pmf cut where its tail mass drops below 1e-15.
SumProb sum_prob_exact(std::int64_t beta, double lambda, std::int64_t kappa);

// Exact probability that every one of the beta = n-k-r outside vertices has at
// least two neighbors among the gamma = k-r designated vertices, conditioned on
// the pair event U in G(n, m). A hypergeometric mixture over the number of
// edges kappa between the two sides. Throws InputError past the exact budget.
double phi_exact_mixture(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t r, EnumOptions options = {});

struct GEta {
  LogNumber g;          // prod_i C(gamma, d_i)
  double eta = 0;       // (1/kappa) sum_i d_i (d_i - 1); 0 when kappa = 0
  std::int64_t kappa = 0;
};
GEta g_and_eta(std::int64_t gamma, std::span<const std::int64_t> degrees);

// One truncated Poisson draw by inversion of the cumulative pmf.
std::int64_t sample_trunc_poisson(double lambda, CounterRng& rng);
std::int64_t sample_trunc_poisson(double lambda, SeedSpec seed);

}  // namespace gnm
