// Test-only oracles, deliberately independent of the library's
// evaluation paths: brute-force alternating sums with repeated
// averaging, power-series reciprocals, finite differences.

#ifndef ZETA_TESTS_ORACLES_HPP
#define ZETA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Alternating sum sum_{n>=1} (-1)^{n+1} n^{-s}: brute-force partial sums
// followed by repeated pairwise averaging of the tail. Independent of the
// Chebyshev acceleration used by the library.
inline double eta_brute_force(double s) {
  const long head = 200000;
  const int averaging_depth = 60;
  double partial = 0.0;
  double sign = 1.0;
  for (long n = 1; n <= head; ++n) {
    partial += sign * std::pow(static_cast<double>(n), -s);
    sign = -sign;
  }
  std::vector<double> tail(averaging_depth + 1);
  for (int j = 0; j <= averaging_depth; ++j) {
    partial += sign * std::pow(static_cast<double>(head + 1 + j), -s);
    sign = -sign;
    tail[j] = partial;
  }
  for (int len = averaging_depth; len >= 1; --len)
    for (int j = 0; j < len; ++j) tail[j] = 0.5 * (tail[j] + tail[j + 1]);
  return tail[0];
}

inline double zeta_brute_force(double s) {
  return eta_brute_force(s) / (1.0 - std::pow(2.0, 1.0 - s));
}

// Taylor coefficients g_k of pi t / sin(pi t) = sum_k g_k t^{2k}, by
// power-series reciprocal of sin(pi t)/(pi t).
inline std::vector<double> pi_t_over_sin_coeffs(int order) {
  auto fact = [](int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  std::vector<double> a(order + 1), g(order + 1);
  for (int k = 0; k <= order; ++k)
    a[k] = (k % 2 ? -1.0 : 1.0) * std::pow(kPi, 2 * k) / fact(2 * k + 1);
  g[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += a[j] * g[k - j];
    g[k] = -s;
  }
  return g;
}

// Fourth-order central second derivative.
inline double second_derivative(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
         (12.0 * h * h);
}

// Two-sided KS statistic of sorted-on-entry-or-not samples against a CDF.
inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
    d = std::max(d, std::abs(static_cast<double>(i) / n - f));
  }
  return d;
}

// Asymptotic two-sided KS critical value at significance alpha.
inline double ks_critical(double alpha, std::size_t n) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace oracles

#endif
