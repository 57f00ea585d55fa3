#include "zeta/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace zeta {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

struct Node {
  double x = 0.0;
  double w = 0.0;
  bool valid = false;
};

double sample(const Integrand& f, double x, long& evals) {
  ++evals;
  const double v = f(x);
  if (!std::isfinite(v))
    throw EvaluationError("integrand returned non-finite value at x = " + std::to_string(x), x);
  return v;
}

// Level-doubling trapezoid in the transformed variable: level 0 uses
// h = 1, each level halves h and evaluates only the odd multiples.
template <typename NodeMap>
ValueWithError run_levels(const Integrand& f, const NodeMap& map, double t_max,
                          const QuadratureConfig& cfg, bool check_tail_decay) {
  ValueWithError out;
  double h = 1.0;
  double weighted_sum = 0.0;
  double prev_integral = 0.0;
  bool have_prev = false;

  // Level 0: all integer multiples of h in [-t_max, t_max].
  const long n0 = static_cast<long>(std::floor(t_max / h));
  double last_tail_term = 0.0;
  for (long k = -n0; k <= n0; ++k) {
    const Node nd = map(k * h);
    if (!nd.valid || nd.w == 0.0) continue;
    const double term = nd.w * sample(f, nd.x, out.evaluations);
    if (!std::isfinite(term))
      throw EvaluationError("integrand contribution overflowed at x = " + std::to_string(nd.x),
                            nd.x);
    weighted_sum += term;
    if (k == n0) last_tail_term = std::abs(term);
  }
  double integral = h * weighted_sum;
  if (check_tail_decay &&
      last_tail_term > std::max(cfg.tol, 1e-8 * (std::abs(integral) + 1.0)))
    throw NonDecayError("tail samples fail to shrink: last node contributes " +
                        std::to_string(last_tail_term));
  prev_integral = integral;
  have_prev = true;

  for (int level = 1; level <= cfg.max_level; ++level) {
    h *= 0.5;
    const long n = static_cast<long>(std::floor(t_max / h));
    if (out.evaluations + n > cfg.max_evals) break;
    for (long k = -n; k <= n; ++k) {
      if (k % 2 == 0) continue;  // even multiples already done
      const Node nd = map(k * h);
      if (!nd.valid || nd.w == 0.0) continue;
      const double term = nd.w * sample(f, nd.x, out.evaluations);
      if (!std::isfinite(term))
        throw EvaluationError("integrand contribution overflowed at x = " + std::to_string(nd.x),
                              nd.x);
      weighted_sum += term;
    }
    integral = h * weighted_sum;
    const double diff = std::abs(integral - prev_integral);
    out.value = integral;
    out.abs_error = std::max(diff, std::numeric_limits<double>::epsilon() * std::abs(integral));
    prev_integral = integral;
    if (level >= 2 && out.abs_error <= cfg.tol) {
      out.converged = true;
      return out;
    }
  }
  out.value = integral;
  if (!have_prev) out.abs_error = std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace

ValueWithError integrate_finite(const Integrand& f, double a, double b,
                                const QuadratureConfig& cfg) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate_finite: need finite a < b");
  const double c = 0.5 * (a + b);
  const double s = 0.5 * (b - a);
  auto map = [a, b, c, s](double t) {
    Node nd;
    const double g = kHalfPi * std::sinh(t);
    const double ch = std::cosh(g);
    nd.x = c + s * std::tanh(g);
    if (nd.x <= a || nd.x >= b) return nd;  // tanh saturated onto an endpoint
    nd.w = s * kHalfPi * std::cosh(t) / (ch * ch);
    nd.valid = std::isfinite(nd.w) && nd.w > 0.0;
    return nd;
  };
  return run_levels(f, map, 3.5, cfg, /*check_tail_decay=*/false);
}

ValueWithError integrate_semi_infinite(const Integrand& f, double a,
                                       const QuadratureConfig& cfg) {
  if (!std::isfinite(a)) throw std::invalid_argument("integrate_semi_infinite: a must be finite");
  auto map = [a](double t) {
    Node nd;
    const double g = kHalfPi * std::sinh(t);
    if (std::abs(g) > 690.0) return nd;  // exp(g) would over/underflow
    const double e = std::exp(g);
    nd.x = a + e;
    if (nd.x <= a || !std::isfinite(nd.x)) return nd;
    nd.w = kHalfPi * std::cosh(t) * e;
    nd.valid = std::isfinite(nd.w) && nd.w > 0.0;
    return nd;
  };
  return run_levels(f, map, 6.8, cfg, /*check_tail_decay=*/true);
}

ValueWithError integrate_real_line(const Integrand& f, const QuadratureConfig& cfg) {
  const ValueWithError pos = integrate_semi_infinite(f, 0.0, cfg);
  const ValueWithError neg =
      integrate_semi_infinite([&f](double x) { return f(-x); }, 0.0, cfg);
  ValueWithError out;
  out.value = pos.value + neg.value;
  out.abs_error = pos.abs_error + neg.abs_error;
  out.evaluations = pos.evaluations + neg.evaluations;
  out.converged = pos.converged && neg.converged;
  return out;
}

}  // namespace zeta
