#ifndef ZETA_ROUTES_HPP
#define ZETA_ROUTES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zeta/quadrature.hpp"
#include "zeta/rational.hpp"
#include "zeta/series.hpp"

namespace zeta {

enum class RouteId {
  euler_even,
  integral_general,
  integral_posint,
  integral_halfint,
  cotangent_odd,
  eta_series,
  dirichlet_series,
};

const char* route_name(RouteId id);
std::optional<RouteId> route_from_name(const std::string& name);

struct RouteResult {
  RouteId route;
  double argument = 0.0;
  ValueWithError result;
  std::string notes;
};

struct ComparisonReport {
  double argument = 0.0;
  std::vector<RouteResult> results;  // ordered by RouteId
  double max_pairwise_gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Closed form for even arguments: the exact rational
/// (-1)^{n-1} 2^{2n-1} B_{2n}/(2n)! times pi^{2n}.
RouteResult zeta_euler_even(unsigned n);

/// The exact rational prefactor of zeta(2n), i.e. zeta(2n)/pi^{2n}.
BigRational euler_even_prefactor(unsigned n);

/// Integral representation valid for any s > 0, s != 1:
/// zeta(s) = (1-2^{1-s})^{-1}/Gamma(s+1) * int_0^inf t^s e^{-t}/(1+e^{-t})^2 dt.
RouteResult zeta_integral_general(double s, const QuadratureConfig& cfg = {});

/// Same integral with exact n! for integer n >= 2.
RouteResult zeta_integral_posint(int n, const QuadratureConfig& cfg = {});

/// Half-integer representation:
/// zeta(n-1/2) = 2^n int_0^inf x^{n-1/2} e^{-x}/(1+e^{-x})^2 dx
///               / (sqrt(pi) (2n-1)!! (1-2^{-(2n-3)/2})), n >= 1.
/// A low-tolerance evaluation of the published y-domain form over
/// [1, inf) is run as an internal consistency check (see notes).
RouteResult zeta_integral_halfint(int n, const QuadratureConfig& cfg = {});

/// Cotangent integral for odd arguments:
/// zeta(2n+1) = (-1)^{n+1} (2 pi)^{2n+1}/(2 (2n+1)!) int_0^1 B_{2n+1}(u) cot(pi u) du.
/// The integrand is symmetric under u -> 1-u, so 2 * int_0^{1/2} is
/// evaluated, with u < 1e-8 patched by the limit (2n+1) B_{2n}/pi.
RouteResult zeta_cotangent_odd(int n, const QuadratureConfig& cfg = {});

RouteResult zeta_eta_route(double s, const SeriesConfig& cfg = {});
RouteResult zeta_dirichlet_route(double s, const SeriesConfig& cfg = {});

/// (2k-1)!! for odd n, exact. Throws for even or non-positive input.
std::uint64_t double_factorial(int n);

/// Cotangent-route integrand after singularity removal (exposed for tests).
double cotangent_integrand(int n, double u);

/// Routes whose domain admits s.
std::vector<RouteId> applicable_routes(double s);

struct FaultInjection {
  RouteId route;
  double offset = 0.0;
};

/// Runs each requested route at s, computes the maximum pairwise gap and
/// passes iff gap <= tol + sum of the two largest reported errors.
/// Results are ordered by RouteId. The fault hook offsets one route's
/// value, for negative testing of the comparator.
ComparisonReport compare_routes(double s, const std::vector<RouteId>& routes, double tol,
                                const QuadratureConfig& cfg = {},
                                const std::optional<FaultInjection>& fault = std::nullopt);

}  // namespace zeta

#endif
