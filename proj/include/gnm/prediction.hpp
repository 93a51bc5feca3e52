#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnm/lognum.hpp"

namespace gnm {

// Model parameters for G(n, m). p = m / C(n, 2) is always derived from m.
class Params {
 public:
  // Throws InputError unless n >= 2, 0 <= m <= C(n, 2) and eps >= 0.
  Params(std::int64_t n, std::int64_t m, double eps = 0.1);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }
  double eps() const noexcept { return eps_; }
  std::int64_t pairs() const noexcept { return n_ * (n_ - 1) / 2; }
  long double p() const noexcept { return static_cast<long double>(m_) / static_cast<long double>(pairs()); }

  // n^(5/4 + eps) < m and m < n^(4/3 + eps).
  bool above_lower_edge() const;
  bool below_upper_edge() const;
  bool in_regime() const { return above_lower_edge() && below_upper_edge(); }

  // ln n^eps.
  long double log_threshold() const noexcept;

 private:
  std::int64_t n_;
  std::int64_t m_;
  double eps_;
};

// C(n, k) C(C(n,2) - C(k,2), m) / C(C(n,2), m).
LogNumber expected_ind_sets(const Params& par, std::int64_t k);

// Smallest k past the mode of expected_ind_sets with value <= n^eps,
// equivalently 1 + the largest k whose value exceeds n^eps.
std::int64_t k_vanilla(const Params& par);

// (2/p)(ln np - ln ln np + ln(e/2)); requires np > e.
double k_vanilla_formula(const Params& par);

// Number of (K, M) choices: C(n, k+r) [k+r]_{2r} / (2^r r!).
LogNumber N_pairs(std::int64_t n, std::int64_t k, std::int64_t r);

// Vertex pairs inside K that must be non-edges or are fixed matching edges:
// C(k+r, 2) - C(2r, 2) + r.
std::int64_t forbidden_pairs(std::int64_t k, std::int64_t r);

// C(C(n,2) - M1, m - r) / C(C(n,2), m).
LogNumber U_prob(const Params& par, std::int64_t k, std::int64_t r);

double phi(double c);
// ln phi(c) = -(c + 1) e^{-c}.
long double log_phi(long double c);
long double c_value(const Params& par, std::int64_t k, std::int64_t r);

// phi(c)^(n-k-r) with c = p (k - r).
LogNumber phi_power(const Params& par, std::int64_t k, std::int64_t r);

// N(k, r) U(m, k, r) phi(c)^(n-k-r); zero when k + r > n.
LogNumber x_prime(const Params& par, std::int64_t k, std::int64_t r);

// 8 (ln np)^3 / (n p^2) and its ceiling. Throws InputError when np <= e.
double r1_value(const Params& par);
std::int64_t r1_cutoff(const Params& par);

// Largest matching size scanned at order k: min(r1, k, n - k), with r1 taken
// as 0 when np <= e.
std::int64_t matching_cap(const Params& par, std::int64_t k);

// argmax over 0 <= r <= matching_cap of x_prime, smallest r on ties. Full scan.
std::int64_t r0_argmax(const Params& par, std::int64_t k);

// First local maximum of x_prime in r, climbing from r = 0. x_prime is not
// unimodal once r_1 is comparable to k: a second, far larger peak sits near
// r = k, where c = p (k - r) is small.
std::int64_t r0_first_hump(const Params& par, std::int64_t k);

// k^3 p / (2 e^2 n) and the same without the factor p.
double r0_formula(const Params& par, std::int64_t k);
double r0_formula_without_p(const Params& par, std::int64_t k);

// Smallest k whose first-hump peak x_prime(k, r0_first_hump) is below n^eps.
// Thresholding the global maximum instead would put k_zero above k_vanilla
// whenever the peak near r = k exists.
std::int64_t k_zero(const Params& par);

struct FirstMomentSum {
  LogNumber sum;
  std::int64_t r0 = 0;
  LogNumber peak;                // x_prime(k, r0)
  std::optional<double> ratio;   // sum / (sqrt(r0) peak); empty when r0 == 0
};
FirstMomentSum first_moment_sum(const Params& par, std::int64_t k);

struct RatioRow {
  std::string name;
  double computed = 0;
  double predicted = 0;
  double rel_error = 0;  // |computed / predicted - 1|
};

// Computed ratios of N, U, the phi power, and x_prime under unit steps in k,
// r, and m, each next to its leading-order prediction:
//   N_k      N(k+1,r)/N(k,r)                 n/k
//   N_r      N(k,r+1)/N(k,r)                 (n-k-r)(k-r)/(2(r+1))
//   U_k      U(m,k+1,r)/U(m,k,r)             k^2/(e^2 n^2)
//   U_r      U(m,k,r+1)/U(m,k,r)             e^{(3r-k)p} p
//   phi_k    phi-power step in k             1
//   phi_r    phi-power step in r             1
//   X_k      X'(m,k+1,r)/X'(m,k,r)           k/(e^2 n)
//   X_r      X'(m,k,r+1)/X'(m,k,r)           k^3 p/(2 e^2 n (r+1))
//   X_rr     X'(r+2) X'(r) / X'(r+1)^2       1 - 1/(r+2)
//   X_m      X'(m+1,k,r)/X'(m,k,r)           1 - k^2/n^2
std::vector<RatioRow> ratio_suite(const Params& par, std::int64_t k, std::int64_t r);

// P(H = i) = C(c, i) C(a - c, b - i) / C(a, b).
double hyper_pmf(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t i);

enum class Tail { upper, lower };
// upper: bound on P(H >= mu + t), exp(-t^2 / (2 (mu + t/3))).
// lower: bound on P(H <= mu - t), exp(-t^2 / (2 (mu - t/3))), needs t <= mu.
double chernoff_hyper(std::int64_t a, std::int64_t b, std::int64_t c, double t, Tail tail);

struct JansonBound {
  double mu = 0;
  double sigma = 0;
  double bound = 1;
};
// Bound on P(no vertex outside T has degree <= 1) in G(N, N, p) with |T| = t.
JansonBound janson_variant_bound(std::int64_t N, std::int64_t t, double p);

// ell (ln n) p^{-3/2} / n.
double gnp_interval_length(double n, double p, double ell);
// n^2 ln(n/k) / k^2.
double m0_spacing(double n, double k);

struct PredictionRow {
  std::int64_t k = 0;
  std::int64_t r0 = 0;  // first hump
  long double log_N = 0;
  long double log_U = 0;
  long double log_phi_power = 0;
  long double log_x_prime = 0;
};

struct PredictionReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double p = 0;
  double eps = 0;
  std::int64_t k_V = 0;
  std::int64_t k_0 = 0;
  std::int64_t r_0 = 0;       // r0_argmax at k_0
  std::int64_t r_0_first_hump = 0;
  std::int64_t r_1 = 0;       // 0 when np <= e
  double r_1_value = 0;
  double r_0_formula = 0;     // k_0^3 p / (2 e^2 n)
  double r_0_formula_without_p = 0;
  double k_V_formula = 0;     // 0 when np <= e
  double k_V_window = 0;      // |k_V - formula| p / 2
  double window_band = 0.05;
  bool regime_lower = false;
  bool regime_upper = false;
  std::vector<std::int64_t> interval;  // {k_0 - 1, k_0}
  std::vector<PredictionRow> table;    // k_0 - 3 .. k_0 + 3
  std::vector<std::string> warnings;
};

PredictionReport predict(const Params& par);

}  // namespace gnm
