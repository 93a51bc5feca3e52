#include "gnm/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "gnm/errors.hpp"

namespace gnm {

namespace {

constexpr long double kE2 = std::numbers::e_v<long double> * std::numbers::e_v<long double>;

long double ld(std::int64_t x) { return static_cast<long double>(x); }

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

long double np_value(const Params& par) { return ld(par.n()) * par.p(); }

// Local maximum of x_prime over r, started from `start`; ties go to the
// smaller r. From start = 0 this is the first hump.
std::pair<std::int64_t, LogNumber> climb(const Params& par, std::int64_t k, std::int64_t start) {
  const std::int64_t cap = matching_cap(par, k);
  std::int64_t r = std::clamp<std::int64_t>(start, 0, cap);
  LogNumber v = x_prime(par, k, r);
  while (r < cap) {
    const LogNumber next = x_prime(par, k, r + 1);
    if (!(next > v)) break;
    ++r;
    v = next;
  }
  while (r > 0) {
    const LogNumber prev = x_prime(par, k, r - 1);
    if (!(prev >= v)) break;
    --r;
    v = prev;
  }
  return {r, v};
}

double ratio_value(const LogNumber& num, const LogNumber& den) {
  if (num.is_zero() || den.is_zero()) return std::nan("");
  return static_cast<double>(std::exp(num.log_value() - den.log_value()));
}

RatioRow make_row(std::string name, double computed, double predicted) {
  return {std::move(name), computed, predicted, std::abs(computed / predicted - 1.0)};
}

}  // namespace

Params::Params(std::int64_t n, std::int64_t m, double eps) : n_(n), m_(m), eps_(eps) {
  if (n < 2) throw InputError("n must be at least 2");
  if (n > 3'000'000'000LL) throw InputError("n is too large");
  if (m < 0 || m > pairs()) throw InputError("m must lie in [0, C(n,2)]");
  if (!(eps >= 0)) throw InputError("eps must be nonnegative");
}

bool Params::above_lower_edge() const {
  return std::log(ld(m_)) > (1.25L + eps_) * std::log(ld(n_));
}

bool Params::below_upper_edge() const {
  return m_ == 0 || std::log(ld(m_)) < (4.0L / 3.0L + eps_) * std::log(ld(n_));
}

long double Params::log_threshold() const noexcept { return eps_ * std::log(ld(n_)); }

LogNumber expected_ind_sets(const Params& par, std::int64_t k) {
  if (k < 0 || k > par.n()) return LogNumber::zero();
  const std::int64_t T = par.pairs();
  const std::int64_t B = choose2(k);
  const std::int64_t free_after = T - par.m() - B;
  if (free_after < 0) return LogNumber::zero();
  const long double log_ratio = -lgamma_diff(ld(T - B + 1), ld(B)) + lgamma_diff(ld(free_after + 1), ld(B));
  return log_binomial(par.n(), k) * LogNumber::from_log(log_ratio);
}

std::int64_t k_vanilla(const Params& par) {
  const long double thr = par.log_threshold();
  std::int64_t last_above = -1;
  LogNumber prev;
  for (std::int64_t k = 0; k <= par.n(); ++k) {
    const LogNumber e = expected_ind_sets(par, k);
    if (e.log_value() > thr) last_above = k;
    else if (k > 0 && e < prev) break;  // past the mode and below threshold
    prev = e;
  }
  return last_above + 1;
}

double k_vanilla_formula(const Params& par) {
  const long double np = np_value(par);
  if (!(np > std::numbers::e_v<long double>)) throw InputError("np must exceed e");
  const long double l = std::log(np);
  return static_cast<double>(2.0L / par.p() * (l - std::log(l) + std::log(std::numbers::e_v<long double> / 2)));
}

LogNumber N_pairs(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (r < 0 || k < r) throw InputError("need 0 <= r <= k");
  if (k + r > n) return LogNumber::zero();
  const long double denom = r * std::numbers::ln2_v<long double> + log_factorial(r);
  return log_binomial(n, k + r) * log_falling(k + r, 2 * r) / LogNumber::from_log(denom);
}

std::int64_t forbidden_pairs(std::int64_t k, std::int64_t r) { return choose2(k + r) - choose2(2 * r) + r; }

LogNumber U_prob(const Params& par, std::int64_t k, std::int64_t r) {
  if (r < 0 || k < r) throw InputError("need 0 <= r <= k");
  const std::int64_t T = par.pairs();
  const std::int64_t m = par.m();
  const std::int64_t M1 = forbidden_pairs(k, r);
  if (m < r || M1 > T || m - r > T - M1) return LogNumber::zero();
  // m!/(m-r)! * (T-M1)!/T! * (T-m)!/(T-m-M1+r)!
  const long double log_u = lgamma_diff(ld(m - r + 1), ld(r)) - lgamma_diff(ld(T - M1 + 1), ld(M1)) +
                            lgamma_diff(ld(T - m - M1 + r + 1), ld(M1 - r));
  return LogNumber::from_log(log_u);
}

double phi(double c) { return std::exp(-(c + 1.0) * std::exp(-c)); }

long double log_phi(long double c) { return -(c + 1.0L) * std::exp(-c); }

long double c_value(const Params& par, std::int64_t k, std::int64_t r) { return par.p() * ld(k - r); }

LogNumber phi_power(const Params& par, std::int64_t k, std::int64_t r) {
  const std::int64_t exponent = par.n() - k - r;
  if (exponent < 0) return LogNumber::zero();
  return LogNumber::from_log(ld(exponent) * log_phi(c_value(par, k, r)));
}

LogNumber x_prime(const Params& par, std::int64_t k, std::int64_t r) {
  if (r < 0 || k < r) throw InputError("need 0 <= r <= k");
  if (k + r > par.n()) return LogNumber::zero();
  return N_pairs(par.n(), k, r) * U_prob(par, k, r) * phi_power(par, k, r);
}

double r1_value(const Params& par) {
  const long double np = np_value(par);
  if (!(np > std::numbers::e_v<long double>)) throw InputError("r_1 needs np > e");
  const long double l = std::log(np);
  return static_cast<double>(8.0L * l * l * l / (np * par.p()));
}

std::int64_t r1_cutoff(const Params& par) { return static_cast<std::int64_t>(std::ceil(r1_value(par))); }

std::int64_t matching_cap(const Params& par, std::int64_t k) {
  const std::int64_t r1 = np_value(par) > std::numbers::e_v<long double> ? r1_cutoff(par) : 0;
  return std::max<std::int64_t>(0, std::min({r1, k, par.n() - k}));
}

std::int64_t r0_argmax(const Params& par, std::int64_t k) {
  const std::int64_t cap = matching_cap(par, k);
  std::int64_t best_r = 0;
  LogNumber best = x_prime(par, k, 0);
  for (std::int64_t r = 1; r <= cap; ++r) {
    const LogNumber v = x_prime(par, k, r);
    if (v > best) {
      best = v;
      best_r = r;
    }
  }
  return best_r;
}

std::int64_t r0_first_hump(const Params& par, std::int64_t k) { return climb(par, k, 0).first; }

double r0_formula(const Params& par, std::int64_t k) {
  return static_cast<double>(ld(k) * ld(k) * ld(k) * par.p() / (2 * kE2 * ld(par.n())));
}

double r0_formula_without_p(const Params& par, std::int64_t k) {
  return static_cast<double>(ld(k) * ld(k) * ld(k) / (2 * kE2 * ld(par.n())));
}

std::int64_t k_zero(const Params& par) {
  // The maximum over r decreases in k past the mode, so walk from k_V toward
  // the crossing point.
  const long double thr = par.log_threshold();
  std::int64_t k = k_vanilla(par);
  auto [r, v] = climb(par, k, 0);
  if (v.log_value() < thr) {
    while (k > 0) {
      const auto [r_prev, v_prev] = climb(par, k - 1, r);
      if (!(v_prev.log_value() < thr)) break;
      --k;
      r = r_prev;
    }
    return k;
  }
  while (k < par.n()) {
    ++k;
    const auto [r_next, v_next] = climb(par, k, r);
    r = r_next;
    if (v_next.log_value() < thr) return k;
  }
  return par.n();
}

FirstMomentSum first_moment_sum(const Params& par, std::int64_t k) {
  FirstMomentSum out;
  const std::int64_t cap = matching_cap(par, k);
  for (std::int64_t r = 0; r <= cap; ++r) {
    const LogNumber v = x_prime(par, k, r);
    out.sum += v;
    if (r == 0 || v > out.peak) {
      out.peak = v;
      out.r0 = r;
    }
  }
  if (out.r0 > 0 && !out.peak.is_zero())
    out.ratio = static_cast<double>(std::exp(out.sum.log_value() - out.peak.log_value()) /
                                    std::sqrt(static_cast<long double>(out.r0)));
  return out;
}

std::vector<RatioRow> ratio_suite(const Params& par, std::int64_t k, std::int64_t r) {
  if (r < 0 || k <= r) throw InputError("need 0 <= r < k");
  const long double n = ld(par.n());
  const long double p = par.p();
  const long double kk = ld(k);
  const long double rr = ld(r);
  std::vector<RatioRow> rows;
  rows.push_back(make_row("N_k", ratio_value(N_pairs(par.n(), k + 1, r), N_pairs(par.n(), k, r)),
                          static_cast<double>(n / kk)));
  rows.push_back(make_row("N_r", ratio_value(N_pairs(par.n(), k, r + 1), N_pairs(par.n(), k, r)),
                          static_cast<double>((n - kk - rr) * (kk - rr) / (2 * (rr + 1)))));
  rows.push_back(make_row("U_k", ratio_value(U_prob(par, k + 1, r), U_prob(par, k, r)),
                          static_cast<double>(kk * kk / (kE2 * n * n))));
  rows.push_back(make_row("U_r", ratio_value(U_prob(par, k, r + 1), U_prob(par, k, r)),
                          static_cast<double>(std::exp((3 * rr - kk) * p) * p)));
  rows.push_back(make_row("phi_k", ratio_value(phi_power(par, k + 1, r), phi_power(par, k, r)), 1.0));
  rows.push_back(make_row("phi_r", ratio_value(phi_power(par, k, r + 1), phi_power(par, k, r)), 1.0));
  const LogNumber x0 = x_prime(par, k, r);
  const LogNumber x1 = x_prime(par, k, r + 1);
  rows.push_back(make_row("X_k", ratio_value(x_prime(par, k + 1, r), x0), static_cast<double>(kk / (kE2 * n))));
  rows.push_back(make_row("X_r", ratio_value(x1, x0),
                          static_cast<double>(kk * kk * kk * p / (2 * kE2 * n * (rr + 1)))));
  if (r + 2 <= k)
    rows.push_back(make_row("X_rr", ratio_value(x_prime(par, k, r + 2) * x0, x1 * x1),
                            static_cast<double>(1.0L - 1.0L / (rr + 2))));
  if (par.m() < par.pairs()) {
    const Params next(par.n(), par.m() + 1, par.eps());
    rows.push_back(make_row("X_m", ratio_value(x_prime(next, k, r), x0), static_cast<double>(1.0L - kk * kk / (n * n))));
  }
  return rows;
}

double hyper_pmf(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t i) {
  if (a < 0 || b < 0 || c < 0 || b > a || c > a) throw InputError("hypergeometric needs 0 <= b, c <= a");
  if (i < 0 || i > b || i > c || b - i > a - c) return 0.0;
  const LogNumber v = log_binomial(c, i) * log_binomial(a - c, b - i) / log_binomial(a, b);
  return v.value();
}

double chernoff_hyper(std::int64_t a, std::int64_t b, std::int64_t c, double t, Tail tail) {
  if (a <= 0 || b < 0 || c < 0 || b > a || c > a) throw InputError("hypergeometric needs 0 <= b, c <= a and a > 0");
  if (!(t >= 0)) throw InputError("t must be nonnegative");
  const double mu = static_cast<double>(b) * static_cast<double>(c) / static_cast<double>(a);
  if (t == 0) return 1.0;
  if (tail == Tail::upper) return std::exp(-t * t / (2 * (mu + t / 3)));
  if (t > mu) throw InputError("lower tail needs t <= mu");
  return std::exp(-t * t / (2 * (mu - t / 3)));
}

JansonBound janson_variant_bound(std::int64_t N, std::int64_t t, double p) {
  if (N < 0 || t < 0 || t > 2 * N) throw InputError("need N >= 0 and 0 <= t <= 2N");
  if (!(p >= 0 && p <= 1)) throw InputError("p must lie in [0, 1]");
  const double q = 1 - p;
  const double n = static_cast<double>(N);
  JansonBound out;
  const double low_degree = N == 0 ? 1.0 : std::pow(q, n) + n * p * std::pow(q, n - 1);
  out.mu = static_cast<double>(2 * N - t) * low_degree;
  if (N >= 1) out.sigma = p * n * (std::pow(q, n - 1) + (N >= 2 ? (n - 1) * p * std::pow(q, n - 2) : 0.0));
  if (p == 0 || p == 1) {
    // Every degree is 0 (p = 0) or N (p = 1), so P(X = 0) is 0 or 1 exactly.
    const bool constrained = 2 * N - t > 0;
    out.bound = !constrained || (p == 1 && N >= 2) ? 1.0 : 0.0;
    return out;
  }
  out.bound = std::exp(-out.mu + out.mu * out.sigma * std::log1p(1 / out.sigma));
  return out;
}

double gnp_interval_length(double n, double p, double ell) { return ell * std::log(n) * std::pow(p, -1.5) / n; }

double m0_spacing(double n, double k) { return n * n * std::log(n / k) / (k * k); }

PredictionReport predict(const Params& par) {
  PredictionReport rep;
  rep.n = par.n();
  rep.m = par.m();
  rep.p = static_cast<double>(par.p());
  rep.eps = par.eps();
  rep.regime_lower = par.above_lower_edge();
  rep.regime_upper = par.below_upper_edge();
  if (!rep.regime_lower || !rep.regime_upper)
    rep.warnings.push_back("m is outside (n^(5/4+eps), n^(4/3+eps)); asymptotic statements may not apply");
  rep.k_V = k_vanilla(par);
  rep.k_0 = k_zero(par);
  if (np_value(par) > std::numbers::e_v<long double>) {
    rep.r_1_value = r1_value(par);
    rep.r_1 = r1_cutoff(par);
    rep.k_V_formula = k_vanilla_formula(par);
    rep.k_V_window = std::abs(static_cast<double>(rep.k_V) - rep.k_V_formula) * rep.p / 2;
    if (rep.k_V_window > rep.window_band) rep.warnings.push_back("k_V lies outside the 0.05 window of the k formula");
  } else {
    rep.warnings.push_back("np <= e: r_1 is undefined, matching size fixed at 0");
  }
  rep.r_0 = r0_argmax(par, rep.k_0);
  rep.r_0_first_hump = r0_first_hump(par, rep.k_0);
  if (rep.r_0 != rep.r_0_first_hump)
    rep.warnings.push_back("x_prime is not unimodal in r at k_0; r_0 is the global argmax, k_0 uses the first hump");
  rep.r_0_formula = r0_formula(par, rep.k_0);
  rep.r_0_formula_without_p = r0_formula_without_p(par, rep.k_0);
  rep.interval = {rep.k_0 - 1, rep.k_0};
  for (std::int64_t k = std::max<std::int64_t>(1, rep.k_0 - 3); k <= std::min(par.n(), rep.k_0 + 3); ++k) {
    PredictionRow row;
    row.k = k;
    row.r0 = r0_first_hump(par, k);
    row.log_N = N_pairs(par.n(), k, row.r0).log_value();
    row.log_U = U_prob(par, k, row.r0).log_value();
    row.log_phi_power = phi_power(par, k, row.r0).log_value();
    row.log_x_prime = x_prime(par, k, row.r0).log_value();
    rep.table.push_back(row);
  }
  return rep;
}

}  // namespace gnm
