#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>

namespace gnm {

// Nonnegative magnitude stored as its natural logarithm. Zero is a separate
// flag whose log value reads as -infinity. Logs are long double so that ratios
// of counts around e^(10^10) keep better than 1e-9 absolute accuracy.
class LogNumber {
 public:
  constexpr LogNumber() = default;  // zero

  static LogNumber zero() { return {}; }
  static LogNumber one() { return from_log(0.0L); }
  static LogNumber from_log(long double log_value) {
    LogNumber x;
    if (log_value == -std::numeric_limits<long double>::infinity()) return x;
    x.log_ = log_value;
    x.zero_ = false;
    return x;
  }
  // value must be >= 0.
  static LogNumber from_value(long double value) {
    return value <= 0 ? zero() : from_log(std::log(value));
  }

  bool is_zero() const noexcept { return zero_; }
  long double log_value() const noexcept {
    return zero_ ? -std::numeric_limits<long double>::infinity() : log_;
  }
  // exp(log_value); overflows to +inf and underflows to 0 like exp.
  double value() const noexcept { return zero_ ? 0.0 : static_cast<double>(std::exp(log_)); }

  LogNumber& operator*=(const LogNumber& o) noexcept {
    if (o.zero_) *this = zero();
    else if (!zero_) log_ += o.log_;
    return *this;
  }
  // Division by zero yields +infinity in the log (a non-zero result).
  LogNumber& operator/=(const LogNumber& o) noexcept {
    if (zero_) return *this;
    log_ = o.zero_ ? std::numeric_limits<long double>::infinity() : log_ - o.log_;
    return *this;
  }
  LogNumber& operator+=(const LogNumber& o) noexcept {
    if (o.zero_) return *this;
    if (zero_) return *this = o;
    const long double hi = std::max(log_, o.log_);
    const long double lo = std::min(log_, o.log_);
    log_ = hi + std::log1p(std::exp(lo - hi));
    return *this;
  }

  friend LogNumber operator*(LogNumber a, const LogNumber& b) noexcept { return a *= b; }
  friend LogNumber operator/(LogNumber a, const LogNumber& b) noexcept { return a /= b; }
  friend LogNumber operator+(LogNumber a, const LogNumber& b) noexcept { return a += b; }

  // |a - b|.
  friend LogNumber abs_difference(const LogNumber& a, const LogNumber& b) noexcept;

  LogNumber pow(long double e) const noexcept {
    if (zero_) return e == 0 ? one() : zero();
    return from_log(log_ * e);
  }

  friend bool operator==(const LogNumber& a, const LogNumber& b) noexcept {
    return a.zero_ == b.zero_ && (a.zero_ || a.log_ == b.log_);
  }
  friend std::partial_ordering operator<=>(const LogNumber& a, const LogNumber& b) noexcept {
    return a.log_value() <=> b.log_value();
  }

 private:
  long double log_ = 0.0L;
  bool zero_ = true;
};

inline LogNumber abs_difference(const LogNumber& a, const LogNumber& b) noexcept {
  if (b.zero_) return a;
  if (a.zero_) return b;
  const long double hi = std::max(a.log_, b.log_);
  const long double lo = std::min(a.log_, b.log_);
  if (hi == lo) return LogNumber::zero();
  return LogNumber::from_log(hi + std::log1p(-std::exp(lo - hi)));
}

// ln Gamma(x + d) - ln Gamma(x) for x > 0, d >= 0, accurate when x is huge and
// d is small relative to x.
long double lgamma_diff(long double x, long double d);

// ln(a!).
long double log_factorial(std::int64_t a);

// C(a, b); zero when b < 0 or b > a. Arguments up to 1e4 go through exact GMP
// binomials, larger ones through lgamma_diff.
LogNumber log_binomial(std::int64_t a, std::int64_t b);

// Falling factorial [a]_b = a (a-1) ... (a-b+1); zero when b > a.
LogNumber log_falling(std::int64_t a, std::int64_t b);

inline constexpr std::int64_t kExactBinomialLimit = 10'000;

}  // namespace gnm
