// Small statistics helpers for Monte Carlo result reporting.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace latcode {

struct BinomialEstimate {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

// Wilson score interval; z defaults to the two-sided 95% quantile.
inline BinomialEstimate wilson_interval(std::uint64_t errors,
                                        std::uint64_t trials,
                                        double z = 1.959963984540054) {
  BinomialEstimate e;
  e.trials = trials;
  e.errors = errors;
  if (trials == 0) return e;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  e.p_hat = p;
  e.ci_lo = errors == 0 ? 0.0 : std::max(0.0, center - half);
  e.ci_hi = errors == trials ? 1.0 : std::min(1.0, center + half);
  return e;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

inline LineFit least_squares(std::span<const double> x,
                             std::span<const double> y) {
  LineFit f;
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) return f;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double d = n * sxx - sx * sx;
  if (d == 0) return f;
  f.slope = (n * sxy - sx * sy) / d;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

}  // namespace latcode
