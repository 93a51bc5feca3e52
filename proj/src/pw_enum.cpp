#include "gnm/pw_enum.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gnm/errors.hpp"

namespace gnm {

namespace {

// ln(e^lambda - lambda - 1), using the power series below 1 to avoid cancellation.
long double log_normalizer(long double lambda) {
  if (lambda < 1) {
    long double term = lambda * lambda / 2;
    long double sum = 0;
    for (int j = 2; term > sum * 1e-21L; ++j) {
      sum += term;
      term *= lambda / (j + 1);
    }
    return std::log(sum);
  }
  // lambda + ln(1 - (lambda + 1) e^{-lambda})
  return lambda + std::log1p(-(lambda + 1) * std::exp(-lambda));
}

void require_lambda(double lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw InputError("lambda must be positive");
}

long double log_of(const mpz_class& v) {
  if (sgn(v) == 0) return -std::numeric_limits<long double>::infinity();
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(static_cast<long double>(mantissa)) + exponent * std::numbers::ln2_v<long double>;
}

mpz_class binomial(std::int64_t a, std::int64_t b) {
  mpz_class out;
  if (b < 0 || b > a) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

// Index window after i rows. With `target` set, only indices that can still
// reach exactly kmax after the remaining rows are kept.
struct Window {
  std::int64_t lo;
  std::int64_t hi;
};

Window window(std::int64_t i, std::int64_t beta, std::int64_t gamma, std::int64_t kmax, bool target) {
  Window w{2 * i, std::min(i * gamma, kmax)};
  if (target) {
    w.lo = std::max(w.lo, kmax - (beta - i) * gamma);
    w.hi = std::min(w.hi, kmax - 2 * (beta - i));
  }
  return w;
}

// Coefficients of (sum_{d>=2} C(gamma, d) x^d)^beta for x^0 .. x^kmax.
std::vector<mpz_class> exact_coefficients(std::int64_t beta, std::int64_t gamma, std::int64_t kmax, bool target) {
  std::vector<mpz_class> row(static_cast<std::size_t>(gamma + 1));
  for (std::int64_t d = 2; d <= gamma; ++d) row[d] = binomial(gamma, d);
  std::vector<mpz_class> cur(static_cast<std::size_t>(kmax + 1));
  std::vector<mpz_class> next(static_cast<std::size_t>(kmax + 1));
  cur[0] = 1;
  Window prev{0, 0};
  for (std::int64_t i = 1; i <= beta; ++i) {
    const Window w = window(i, beta, gamma, kmax, target);
    for (auto& v : next) v = 0;
    for (std::int64_t j = w.lo; j <= w.hi; ++j) {
      const std::int64_t d_lo = std::max<std::int64_t>(2, j - prev.hi);
      const std::int64_t d_hi = std::min(gamma, j - prev.lo);
      mpz_class& acc = next[j];
      for (std::int64_t d = d_lo; d <= d_hi; ++d) mpz_addmul(acc.get_mpz_t(), row[d].get_mpz_t(), cur[j - d].get_mpz_t());
    }
    std::swap(cur, next);
    prev = w;
    if (w.lo > w.hi) break;
  }
  return cur;
}

// The same coefficient in floating point: values are rescaled by their row
// maximum after every row, the scale kept as a log, and each convolution sum
// is compensated.
long double log_coefficient_float(std::int64_t beta, std::int64_t gamma, std::int64_t kappa) {
  std::vector<long double> row(static_cast<std::size_t>(gamma + 1), 0.0L);
  for (std::int64_t d = 2; d <= gamma; ++d) row[d] = std::exp(log_binomial(gamma, d).log_value());
  std::vector<long double> cur(static_cast<std::size_t>(kappa + 1), 0.0L);
  std::vector<long double> next(static_cast<std::size_t>(kappa + 1), 0.0L);
  cur[0] = 1;
  long double log_scale = 0;
  Window prev{0, 0};
  for (std::int64_t i = 1; i <= beta; ++i) {
    const Window w = window(i, beta, gamma, kappa, true);
    if (w.lo > w.hi) return -std::numeric_limits<long double>::infinity();
    std::fill(next.begin(), next.end(), 0.0L);
    long double peak = 0;
    for (std::int64_t j = w.lo; j <= w.hi; ++j) {
      const std::int64_t d_lo = std::max<std::int64_t>(2, j - prev.hi);
      const std::int64_t d_hi = std::min(gamma, j - prev.lo);
      long double sum = 0;
      long double comp = 0;
      for (std::int64_t d = d_lo; d <= d_hi; ++d) {
        const long double y = row[d] * cur[j - d] - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
      }
      next[j] = sum;
      peak = std::max(peak, sum);
    }
    if (peak <= 0) return -std::numeric_limits<long double>::infinity();
    for (std::int64_t j = w.lo; j <= w.hi; ++j) next[j] /= peak;
    log_scale += std::log(peak);
    std::swap(cur, next);
    prev = w;
  }
  return cur[kappa] > 0 ? log_scale + std::log(cur[kappa]) : -std::numeric_limits<long double>::infinity();
}

}  // namespace

double trunc_pmf(double lambda, std::int64_t j) {
  require_lambda(lambda);
  if (j < 2) return 0.0;
  const long double lj = static_cast<long double>(j);
  return static_cast<double>(
      std::exp(lj * std::log(static_cast<long double>(lambda)) - std::lgamma(lj + 1) - log_normalizer(lambda)));
}

double trunc_mean(double lambda) {
  require_lambda(lambda);
  const long double l = lambda;
  // lambda (e^lambda - 1) / (e^lambda - lambda - 1)
  const long double log_num = std::log(l) + (l < 1 ? std::log(std::expm1(l)) : l + std::log1p(-std::exp(-l)));
  return static_cast<double>(std::exp(log_num - log_normalizer(l)));
}

double solve_lambda_c(double c) {
  if (!(c > 2) || !std::isfinite(c)) throw InputError("lambda_c needs c > 2");
  double lo = 1e-9;
  double hi = c;
  while (trunc_mean(hi) <= c) hi *= 2;
  for (int iter = 0; iter < 300 && hi - lo > 0; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (trunc_mean(mid) < c ? lo : hi) = mid;
  }
  return std::abs(trunc_mean(lo) - c) <= std::abs(trunc_mean(hi) - c) ? lo : hi;
}

double eta_bar(double c) {
  const double l = solve_lambda_c(c);
  return l / -std::expm1(-l);
}

const char* to_string(EnumMode mode) { return mode == EnumMode::exact_int ? "exact-int" : "log-float"; }

EnumResult count_min2_matrices(std::int64_t beta, std::int64_t gamma, std::int64_t kappa, EnumOptions options) {
  if (beta < 1 || gamma < 1) throw InputError("beta and gamma must be at least 1");
  if (kappa < 0 || kappa > beta * gamma) throw InputError("kappa must lie in [0, beta*gamma]");
  EnumResult out;
  out.beta = beta;
  out.gamma = gamma;
  out.kappa = kappa;
  const bool feasible = kappa >= 2 * beta && gamma >= 2;
  const auto work = static_cast<long double>(beta) * static_cast<long double>(gamma) * static_cast<long double>(kappa);
  if (work <= static_cast<long double>(options.exact_budget)) {
    out.mode = EnumMode::exact_int;
    mpz_class count = 0;
    if (feasible) count = exact_coefficients(beta, gamma, kappa, true)[kappa];
    out.exact = count.get_str();
    out.count = LogNumber::from_log(log_of(count));
  } else {
    out.mode = EnumMode::log_float;
    out.count = feasible ? LogNumber::from_log(log_coefficient_float(beta, gamma, kappa)) : LogNumber::zero();
  }
  out.f = out.count / log_binomial(beta * gamma, kappa);
  return out;
}

MainTerm f_main_term(std::int64_t beta, std::int64_t kappa) {
  if (beta < 1 || kappa < 2 * beta) throw InputError("main term needs beta >= 1 and kappa >= 2 beta");
  const long double c = static_cast<long double>(kappa) / static_cast<long double>(beta);
  MainTerm out;
  out.log_value = static_cast<long double>(beta) * std::log1p(-(c + 1) * std::exp(-c));
  out.value = static_cast<double>(std::exp(out.log_value));
  out.secondary = static_cast<double>(std::exp(-2 * c));
  return out;
}

SumProb sum_prob_exact(std::int64_t beta, double lambda, std::int64_t kappa) {
  require_lambda(lambda);
  if (beta < 1) throw InputError("beta must be at least 1");
  SumProb out;
  if (kappa < 2 * beta) return out;
  // pmf for j = 2 .. J, J the first point past the mean where a geometric bound
  // on the remaining tail falls below 1e-15.
  std::vector<long double> pmf(3, 0.0L);
  pmf[2] = trunc_pmf(lambda, 2);
  long double tail = 0;
  for (std::int64_t j = 2;; ++j) {
    const long double next = pmf[j] * lambda / static_cast<long double>(j + 1);
    const long double ratio = static_cast<long double>(lambda) / static_cast<long double>(j + 2);
    if (j + 1 > kappa) break;
    if (ratio < 1 && next / (1 - ratio) < 1e-15L) {
      tail = next / (1 - ratio);
      break;
    }
    pmf.push_back(next);
  }
  out.discarded_mass = static_cast<double>(std::min<long double>(1, tail * static_cast<long double>(beta)));
  const auto J = static_cast<std::int64_t>(pmf.size()) - 1;
  std::vector<long double> cur(static_cast<std::size_t>(kappa + 1), 0.0L);
  std::vector<long double> next(static_cast<std::size_t>(kappa + 1), 0.0L);
  cur[0] = 1;
  for (std::int64_t i = 1; i <= beta; ++i) {
    const std::int64_t lo = std::max(2 * i, kappa - (beta - i) * J);
    const std::int64_t hi = std::min(i * J, kappa - 2 * (beta - i));
    std::fill(next.begin(), next.end(), 0.0L);
    for (std::int64_t j = std::max<std::int64_t>(lo, 0); j <= hi; ++j) {
      long double sum = 0;
      for (std::int64_t d = 2; d <= std::min(J, j); ++d) sum += pmf[d] * cur[j - d];
      next[j] = sum;
    }
    std::swap(cur, next);
  }
  out.value = static_cast<double>(cur[kappa]);
  return out;
}

double phi_exact_mixture(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t r, EnumOptions options) {
  if (n < 1 || r < 0 || k < r || k + r > n) throw InputError("need 0 <= r <= k and k + r <= n");
  const std::int64_t T = n * (n - 1) / 2;
  if (m < 0 || m > T) throw InputError("m must lie in [0, C(n,2)]");
  const std::int64_t M1 = (k + r) * (k + r - 1) / 2 - (2 * r) * (2 * r - 1) / 2 + r;
  if (m < r || m - r > T - M1) return 0.0;  // the pair event itself is impossible
  const std::int64_t beta = n - k - r;
  const std::int64_t gamma = k - r;
  if (beta == 0) return 1.0;
  if (gamma < 2) return 0.0;
  const std::int64_t A = beta * gamma;
  const std::int64_t free_slots = T - M1;
  const std::int64_t kmax = std::min(A, m - r);
  const auto work = static_cast<long double>(beta) * static_cast<long double>(gamma) * static_cast<long double>(kmax);
  if (work > static_cast<long double>(options.exact_budget)) throw InputError("instance exceeds the exact enumeration budget");
  // sum_kappa C(beta, gamma, kappa) C(free - A, m - r - kappa) / C(free, m - r)
  const std::vector<mpz_class> counts = exact_coefficients(beta, gamma, kmax, false);
  mpz_class numerator = 0;
  for (std::int64_t kappa = 2 * beta; kappa <= kmax; ++kappa)
    if (sgn(counts[kappa]) != 0) numerator += counts[kappa] * binomial(free_slots - A, m - r - kappa);
  const mpq_class value(numerator, binomial(free_slots, m - r));
  return value.get_d();
}

GEta g_and_eta(std::int64_t gamma, std::span<const std::int64_t> degrees) {
  if (gamma < 0) throw InputError("gamma must be nonnegative");
  GEta out;
  out.g = LogNumber::one();
  std::int64_t pairs = 0;
  for (std::int64_t d : degrees) {
    if (d < 0 || d > gamma) throw InputError("degree out of range");
    out.g *= log_binomial(gamma, d);
    out.kappa += d;
    pairs += d * (d - 1);
  }
  out.eta = out.kappa > 0 ? static_cast<double>(pairs) / static_cast<double>(out.kappa) : 0.0;
  return out;
}

std::int64_t sample_trunc_poisson(double lambda, CounterRng& rng) {
  require_lambda(lambda);
  const long double u = rng.uniform();
  long double p = trunc_pmf(lambda, 2);
  long double cumulative = p;
  std::int64_t j = 2;
  while (cumulative <= u) {
    p *= lambda / static_cast<long double>(j + 1);
    // Past the mean with a pmf too small to move the sum, rounding has used up
    // the remaining mass.
    if (p == 0 || (j > lambda && cumulative + p == cumulative)) break;
    cumulative += p;
    ++j;
  }
  return j;
}

std::int64_t sample_trunc_poisson(double lambda, SeedSpec seed) {
  CounterRng rng(seed);
  return sample_trunc_poisson(lambda, rng);
}

}  // namespace gnm
