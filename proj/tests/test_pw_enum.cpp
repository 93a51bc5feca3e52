#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "gnm/errors.hpp"
#include "gnm/oracles.hpp"
#include "gnm/prediction.hpp"
#include "gnm/pw_enum.hpp"

using namespace gnm;

TEST(TruncPoisson, Examples) {
  EXPECT_NEAR(trunc_pmf(1, 2), 0.5 / (std::numbers::e - 2), 1e-14);
  EXPECT_NEAR(trunc_pmf(1, 2), 0.69611, 5e-6);
  EXPECT_EQ(trunc_pmf(3, 1), 0.0);
  EXPECT_EQ(trunc_pmf(3, 0), 0.0);
  double total = 0;
  for (int j = 2; j <= 60; ++j) total += trunc_pmf(5, j);
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(trunc_mean(1e-6), 2.0, 1e-5);
  EXPECT_THROW(trunc_pmf(0, 2), InputError);
  EXPECT_THROW(trunc_mean(-1), InputError);
}

TEST(TruncPoisson, MeanIncreasing) {
  double prev = trunc_mean(1e-4);
  for (double l = 0.01; l < 40; l *= 1.3) {
    const double cur = trunc_mean(l);
    EXPECT_GT(cur, prev);
    prev = cur;
  }
}

TEST(SolveLambda, Examples) {
  EXPECT_NEAR(solve_lambda_c(2.5), 1.230, 0.005);
  EXPECT_NEAR(solve_lambda_c(10), 10 - 100 * std::exp(-10.0), 1e-2);
  for (double c : {2.01, 2.5, 3.0, 7.0, 20.0, 100.0}) EXPECT_NEAR(trunc_mean(solve_lambda_c(c)), c, 1e-12) << c;
  double prev = solve_lambda_c(2.05);
  for (double c = 2.1; c < 30; c += 0.7) {
    const double cur = solve_lambda_c(c);
    EXPECT_LT(prev, cur);
    prev = cur;
  }
  EXPECT_THROW(solve_lambda_c(2.0), InputError);
}

TEST(EtaBar, NearCAtTen) {
  EXPECT_NEAR(eta_bar(10), 10.0, 1e-3);
}

TEST(EtaBar, ClosedForm) {
  for (double c : {2.05, 3.0, 6.0, 10.0, 25.0}) {
    const double lambda = solve_lambda_c(c);
    EXPECT_NEAR(eta_bar(c), lambda / (1 - std::exp(-lambda)), 1e-12 * c) << c;
  }
  // Second-order expansion c - (c^2 - c) e^{-c}.
  EXPECT_NEAR(eta_bar(10), 10 - 90 * std::exp(-10.0), 1e-4);
}

TEST(EtaBar, FactorialMomentIdentity) {
  const double lambda = solve_lambda_c(6);
  double moment = 0;
  for (int j = 2; j <= 200; ++j) moment += j * (j - 1.0) * trunc_pmf(lambda, j);
  EXPECT_NEAR(moment, 6 * eta_bar(6), 1e-8);
}

TEST(EtaBar, AboveTwoOnGrid) {
  for (double c = 2.05; c < 40; c += 0.5) EXPECT_GT(eta_bar(c), 2.0) << c;
}

TEST(EtaBar, VariancePositiveOnGrid) {
  // Var(chi) = c (1 + eta_c - c) must be positive.
  for (double c = 2.05; c < 40; c += 0.5) EXPECT_GT(1 + eta_bar(c) - c, 0.0) << c;
}

TEST(CountMin2, Examples) {
  const EnumResult a = count_min2_matrices(2, 3, 4);
  ASSERT_TRUE(a.exact.has_value());
  EXPECT_EQ(*a.exact, "9");
  EXPECT_NEAR(a.f.value(), 0.6, 1e-14);
  EXPECT_EQ(a.mode, EnumMode::exact_int);
  EXPECT_TRUE(count_min2_matrices(1, 5, 1).count.is_zero());
  EXPECT_TRUE(count_min2_matrices(1, 5, 0).count.is_zero());
  const EnumResult forced = count_min2_matrices(2, 2, 4);
  EXPECT_EQ(*forced.exact, "1");
  EXPECT_NEAR(forced.f.value(), 1.0, 1e-15);
  EXPECT_THROW(count_min2_matrices(0, 3, 0), InputError);
  EXPECT_THROW(count_min2_matrices(2, 3, 7), InputError);
}

TEST(CountMin2, MatchesBruteForce) {
  for (int beta = 1; beta <= 20; ++beta)
    for (int gamma = 1; beta * gamma <= 20; ++gamma) {
      const auto counts = oracle::min2_counts_bruteforce(beta, gamma);
      for (int kappa = 0; kappa <= beta * gamma; ++kappa) {
        const EnumResult r = count_min2_matrices(beta, gamma, kappa);
        ASSERT_EQ(*r.exact, std::to_string(counts[kappa])) << beta << " " << gamma << " " << kappa;
        EXPECT_LE(r.f.value(), 1.0 + 1e-12);
      }
    }
}

TEST(CountMin2, MatchesRecursion) {
  for (int beta = 1; beta <= 7; ++beta)
    for (int gamma = 2; gamma <= 7; ++gamma)
      for (int kappa = 2 * beta; kappa <= beta * gamma; ++kappa)
        EXPECT_EQ(*count_min2_matrices(beta, gamma, kappa).exact, oracle::min2_count_recursive(beta, gamma, kappa));
}

TEST(CountMin2, LogModeAgreesWithExact) {
  for (int beta = 2; beta <= 10; ++beta)
    for (int gamma = 2; gamma <= 10; ++gamma)
      for (int kappa = 2 * beta; kappa <= beta * gamma; kappa += 3) {
        const EnumResult exact = count_min2_matrices(beta, gamma, kappa);
        const EnumResult approx = count_min2_matrices(beta, gamma, kappa, {0});
        EXPECT_EQ(approx.mode, EnumMode::log_float);
        EXPECT_FALSE(approx.exact.has_value());
        EXPECT_NEAR(static_cast<double>(approx.count.log_value()), static_cast<double>(exact.count.log_value()),
                    1e-9 * std::max(1.0, static_cast<double>(exact.count.log_value())));
      }
}

TEST(CountMin2, LargeInstanceInLogSpace) {
  const EnumResult r = count_min2_matrices(500, 80, 1553);
  EXPECT_EQ(r.mode, EnumMode::log_float);
  EXPECT_TRUE(std::isfinite(static_cast<double>(r.count.log_value())));
  EXPECT_LE(r.f.log_value(), 0.0L);
}

TEST(MainTerm, LimitAtFifty) {
  EXPECT_GT(f_main_term(1000, 50'000).value, 1 - 1e-18);
}

TEST(MainTerm, Examples) {
  const MainTerm fifty = f_main_term(1000, 50'000);
  EXPECT_LE(fifty.value, 1.0);
  EXPECT_NEAR(static_cast<double>(fifty.log_value), 1000 * std::log1p(-51 * std::exp(-50.0)), 1e-30);
  const std::int64_t beta = 500;
  const auto kappa = static_cast<std::int64_t>(std::ceil(beta * std::log(500.0)));
  const MainTerm t = f_main_term(beta, kappa);
  const double c = static_cast<double>(kappa) / beta;
  EXPECT_NEAR(static_cast<double>(t.log_value), beta * std::log1p(-(c + 1) * std::exp(-c)), 1e-9);
  EXPECT_NEAR(t.secondary, std::exp(-2 * c), 1e-15);
  for (std::int64_t k = 1000; k <= 5000; k += 250) EXPECT_LE(f_main_term(500, k).value, 1.0);
  EXPECT_THROW(f_main_term(10, 19), InputError);
}

TEST(SumProb, Examples) {
  EXPECT_NEAR(sum_prob_exact(1, 2.0, 5).value, trunc_pmf(2.0, 5), 1e-15);
  EXPECT_NEAR(sum_prob_exact(2, 1.5, 4).value, trunc_pmf(1.5, 2) * trunc_pmf(1.5, 2), 1e-15);
  EXPECT_EQ(sum_prob_exact(3, 1.5, 5).value, 0.0);
  const double lambda = solve_lambda_c(6);
  const SumProb s = sum_prob_exact(500, lambda, 3000);
  const double clt = 1 / std::sqrt(2 * std::numbers::pi * 3000 * (1 + eta_bar(6) - 6));
  EXPECT_NEAR(s.value, clt, 0.05 * clt);
  EXPECT_LT(s.discarded_mass, 1e-12);
}

TEST(PhiExact, Examples) {
  EXPECT_NEAR(phi_exact_mixture(6, 9, 2, 0), 6.0 / 2002, 1e-15);
  // m - r < 2 beta.
  EXPECT_EQ(phi_exact_mixture(6, 7, 2, 0), 0.0);
  EXPECT_EQ(phi_exact_mixture(7, 12, 2, 1), 0.0);
}

TEST(PhiExact, MatchesConditionalEnumeration) {
  // pair_x / pair_u is the conditional probability given U.
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; k <= 4 && k <= n; ++k)
      for (int r = 0; r <= 1 && k + r <= n && r <= k; ++r) {
        const oracle::MomentTable t = oracle::exact_x_moments(n, k, r);
        for (int m = r; m <= n * (n - 1) / 2; ++m) {
          if (t.pair_u[m] == 0) continue;
          const double want = static_cast<double>(t.pair_x[m]) / static_cast<double>(t.pair_u[m]);
          EXPECT_NEAR(phi_exact_mixture(n, m, k, r), want, 1e-12) << n << " " << m << " " << k << " " << r;
        }
      }
}

TEST(GEta, Examples) {
  const std::vector<std::int64_t> zeros(4, 0);
  const GEta z = g_and_eta(5, zeros);
  EXPECT_EQ(z.g.log_value(), 0.0L);
  EXPECT_EQ(z.eta, 0.0);
  EXPECT_EQ(z.kappa, 0);
  const std::vector<std::int64_t> twos{2, 2};
  const GEta t = g_and_eta(3, twos);
  EXPECT_NEAR(t.g.value(), 9.0, 1e-12);
  EXPECT_DOUBLE_EQ(t.eta, 1.0);
  EXPECT_EQ(t.kappa, 4);
  const std::vector<std::int64_t> bad{4};
  EXPECT_THROW(g_and_eta(3, bad), InputError);
}

TEST(GEta, CountsMatricesWithRowSums) {
  for (int beta = 1; beta <= 3; ++beta)
    for (int gamma = 1; beta * gamma <= 12; ++gamma) {
      std::vector<std::uint64_t> tally(1U << (4 * beta), 0);
      for (std::uint32_t mask = 0; mask < (1U << (beta * gamma)); ++mask) {
        std::uint32_t key = 0;
        for (int row = 0; row < beta; ++row)
          key |= static_cast<std::uint32_t>(std::popcount(mask >> (row * gamma) & ((1U << gamma) - 1))) << (4 * row);
        ++tally[key];
      }
      for (std::uint32_t key = 0; key < tally.size(); ++key) {
        std::vector<std::int64_t> deg;
        bool ok = true;
        for (int row = 0; row < beta; ++row) {
          deg.push_back(key >> (4 * row) & 15U);
          ok = ok && deg.back() <= gamma;
        }
        if (!ok) continue;
        EXPECT_NEAR(g_and_eta(gamma, deg).g.value(), static_cast<double>(tally[key]), 1e-9);
      }
    }
}

TEST(SampleTruncPoisson, MeanSupportAndTail) {
  const double lambda = solve_lambda_c(4);
  CounterRng rng({77, 0});
  const int draws = 100'000;
  double sum = 0;
  double sq = 0;
  for (int i = 0; i < draws; ++i) {
    const auto j = sample_trunc_poisson(lambda, rng);
    ASSERT_GE(j, 2);
    sum += static_cast<double>(j);
    sq += static_cast<double>(j * j);
  }
  const double mean = sum / draws;
  const double sd = std::sqrt(sq / draws - mean * mean);
  EXPECT_NEAR(mean, 4.0, 3 * sd / std::sqrt(draws));

  const auto j0 = static_cast<std::int64_t>(std::ceil(2 * std::numbers::e * 3)) + 10;
  int tail = 0;
  CounterRng rng3({78, 0});
  for (int i = 0; i < draws; ++i) tail += sample_trunc_poisson(3.0, rng3) >= j0;
  EXPECT_LE(static_cast<double>(tail) / draws, 5 * std::exp(-static_cast<double>(j0) / 2));
  EXPECT_EQ(sample_trunc_poisson(2.5, SeedSpec{4, 9}), sample_trunc_poisson(2.5, SeedSpec{4, 9}));
}

TEST(SampleTruncPoisson, MatchesPmf) {
  CounterRng rng({79, 1});
  const int draws = 200'000;
  std::vector<int> hist(40, 0);
  for (int i = 0; i < draws; ++i) {
    const auto j = sample_trunc_poisson(1.7, rng);
    if (j < 40) ++hist[j];
  }
  for (int j = 2; j < 8; ++j) {
    const double p = trunc_pmf(1.7, j);
    EXPECT_NEAR(hist[j] / static_cast<double>(draws), p, 4 * std::sqrt(p * (1 - p) / draws)) << j;
  }
}
