#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace cw {

/// Compensated (Neumaier) summation. Keeps absolute error near one ulp of the
/// result even for millions of terms; plain accumulation would not meet the
/// 1e-12 normalization budget at n = 1e6.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// log(n choose k) via lgamma. Grouped so the expression is bitwise symmetric
/// under k <-> n-k.
inline double log_choose(std::int64_t n, std::int64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         (std::lgamma(static_cast<double>(k) + 1.0) +
          std::lgamma(static_cast<double>(n - k) + 1.0));
}

/// log(sum(exp(x))) of a contiguous block, stable for widely spread inputs.
double log_sum_exp(std::span<const double> x);

/// Error-free transforms. hi + lo represents the exact result of the
/// operation; used where a plain double would round at the magnitude of a
/// large intermediate (Gibbs exponents reach ~n beta).
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bp = s - a;
  return {s, (a - (s - bp)) + (b - bp)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD div_rem(double a, double b) {
  const double q = a / b;
  return {q, std::fma(-q, b, a) / b};
}

inline DD dd_add(DD a, double b) {
  DD s = two_sum(a.hi, b);
  s.lo += a.lo;
  return two_sum(s.hi, s.lo);
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return two_sum(s.hi, s.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Least-squares slope of y against x.
double fitted_slope(std::span<const double> x, std::span<const double> y);

}  // namespace cw
