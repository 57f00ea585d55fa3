#ifndef ZETA_QUADRATURE_HPP
#define ZETA_QUADRATURE_HPP

#include <functional>
#include <limits>

#include "zeta/errors.hpp"

namespace zeta {

struct QuadratureConfig {
  double tol = 1e-12;      // absolute tolerance target
  int max_level = 12;      // refinement-depth cap
  long max_evals = 1 << 20;
};

struct ValueWithError {
  double value = 0.0;
  double abs_error = std::numeric_limits<double>::infinity();
  long evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Tanh-sinh quadrature of f over (a,b). Endpoint abscissae are never
/// emitted; removable endpoint singularities need no special casing so
/// long as f is evaluable on the open interval. Error is the difference
/// between consecutive refinement levels. Non-finite samples raise
/// EvaluationError with the offending abscissa.
ValueWithError integrate_finite(const Integrand& f, double a, double b,
                                const QuadratureConfig& cfg = {});

/// Exp-sinh quadrature of f over (a, inf). Tolerates an integrable power
/// singularity at a and requires (sub-)exponential decay at infinity;
/// raises NonDecayError when the tail contribution fails to shrink.
ValueWithError integrate_semi_infinite(const Integrand& f, double a,
                                       const QuadratureConfig& cfg = {});

/// Whole-line integral as two semi-infinite halves split at zero.
ValueWithError integrate_real_line(const Integrand& f, const QuadratureConfig& cfg = {});

}  // namespace zeta

#endif
