#include "zeta/series.hpp"

#include <cmath>
#include <stdexcept>

namespace zeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

ValueWithError zeta_dirichlet(double s, const SeriesConfig& cfg) {
  if (!(s > 1.0)) throw std::domain_error("zeta_dirichlet: requires s > 1");
  ValueWithError out;
  // Euler-Maclaurin: sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + (s/12) N^{-s-1},
  // truncation error ~ s(s+1)(s+2)/720 * N^{-s-3}.
  long n_terms = 16;
  auto em_error = [s](double n) {
    return s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(n, -s - 3.0);
  };
  while (n_terms < cfg.max_terms && em_error(static_cast<double>(n_terms)) > cfg.tol)
    n_terms *= 2;
  if (n_terms > cfg.max_terms) n_terms = cfg.max_terms;
  const double nd = static_cast<double>(n_terms);

  double sum = 0.0;
  for (long n = n_terms - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
  sum += std::pow(nd, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(nd, -s);
  sum += s / 12.0 * std::pow(nd, -s - 1.0);

  const double tail_bound = std::pow(nd, 1.0 - s) / (s - 1.0);
  out.value = sum;
  out.abs_error = std::min(em_error(nd) + 4.0 * kEps * std::abs(sum), tail_bound);
  out.evaluations = n_terms;
  out.converged = out.abs_error <= cfg.tol;
  return out;
}

ValueWithError eta_alternating_sum(double s, const SeriesConfig& cfg) {
  if (!(s > 0.0)) throw std::domain_error("eta_alternating_sum: requires s > 0");
  // Cohen-Rodriguez Villegas-Zagier acceleration with Chebyshev weights:
  // remainder shrinks like (3+sqrt(8))^{-n}.
  const int n = 60;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const double a_k = std::pow(static_cast<double>(k + 1), -s);  // (-1)^k a_k term sign in c
    sum += c * a_k;
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  ValueWithError out;
  out.value = sum / d;
  out.abs_error = std::max(3.0 / d, 4.0 * kEps * std::abs(out.value));
  out.evaluations = n;
  out.converged = out.abs_error <= cfg.tol;
  return out;
}

ValueWithError zeta_eta_accelerated(double s, const SeriesConfig& cfg) {
  if (!(s > 0.0)) throw std::domain_error("zeta_eta_accelerated: requires s > 0");
  if (std::abs(s - 1.0) <= 1e-9)
    throw std::domain_error("zeta_eta_accelerated: s too close to the pole at s = 1");
  const ValueWithError eta = eta_alternating_sum(s, cfg);
  const double factor = 1.0 - std::pow(2.0, 1.0 - s);
  ValueWithError out;
  out.value = eta.value / factor;
  // Conditioning of the division: relative error of the factor itself is
  // O(eps); near s = 1 the small factor amplifies everything.
  out.abs_error = (eta.abs_error + kEps * std::abs(eta.value)) / std::abs(factor) +
                  2.0 * kEps * std::abs(out.value);
  out.evaluations = eta.evaluations;
  out.converged = out.abs_error <= cfg.tol;
  return out;
}

}  // namespace zeta
