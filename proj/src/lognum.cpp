#include "gnm/lognum.hpp"

#include <gmp.h>

#include <array>
#include <numbers>

#include "gnm/errors.hpp"

namespace gnm {

namespace {

// Stirling tail sum_j B_2j / (2j (2j-1) z^(2j-1)), good to long double for z >= 16.
long double stirling_tail(long double z) {
  static constexpr std::array<long double, 8> coeff = {
      1.0L / 12,          -1.0L / 360,          1.0L / 1260,       -1.0L / 1680,
      1.0L / 1188,        -691.0L / 360360,     1.0L / 156,        -3617.0L / 122400,
  };
  const long double inv = 1.0L / z;
  const long double inv2 = inv * inv;
  long double term = inv;
  long double sum = 0;
  for (long double c : coeff) {
    sum += c * term;
    term *= inv2;
  }
  return sum;
}

constexpr long double kStirlingMin = 16.0L;

}  // namespace

long double lgamma_diff(long double x, long double d) {
  if (!(x > 0) || d < 0) throw InputError("lgamma_diff needs x > 0 and d >= 0");
  if (d == 0) return 0;
  if (x < kStirlingMin) {
    // Shift both arguments up by s with the recurrence Gamma(z + 1) = z Gamma(z).
    const int s = static_cast<int>(std::ceil(kStirlingMin - x));
    long double correction = 0;
    for (int i = 0; i < s; ++i) correction += std::log(x + i) - std::log(x + d + i);
    return lgamma_diff(x + s, d) + correction;
  }
  // (x+d-1/2) ln(x+d) - (x-1/2) ln x - d, rearranged to avoid cancellation.
  const long double main = (x - 0.5L) * std::log1p(d / x) + d * std::log(x + d) - d;
  return main + stirling_tail(x + d) - stirling_tail(x);
}

long double log_factorial(std::int64_t a) {
  if (a < 0) throw InputError("factorial of a negative number");
  return a < 2 ? 0.0L : lgamma_diff(1.0L, static_cast<long double>(a));
}

LogNumber log_binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return LogNumber::zero();
  b = std::min(b, a - b);
  if (b == 0) return LogNumber::one();
  if (a <= kExactBinomialLimit) {
    mpz_t value;
    mpz_init(value);
    mpz_bin_uiui(value, static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value);
    mpz_clear(value);
    return LogNumber::from_log(std::log(static_cast<long double>(mantissa)) +
                               exponent * std::numbers::ln2_v<long double>);
  }
  const long double la = static_cast<long double>(a);
  const long double lb = static_cast<long double>(b);
  return LogNumber::from_log(lgamma_diff(la - lb + 1, lb) - log_factorial(b));
}

LogNumber log_falling(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0) throw InputError("falling factorial needs a, b >= 0");
  if (b > a) return LogNumber::zero();
  if (b == 0) return LogNumber::one();
  return LogNumber::from_log(lgamma_diff(static_cast<long double>(a - b + 1), static_cast<long double>(b)));
}

}  // namespace gnm
