#include "zeta/routes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zeta/bernoulli.hpp"
#include "zeta/gamma.hpp"

namespace zeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool near_integer(double s, long& n) {
  const double r = std::round(s);
  if (std::abs(s - r) < 1e-12) {
    n = static_cast<long>(r);
    return true;
  }
  return false;
}

double power_logistic_integrand(double s, double t) {
  // t^s e^{-t}/(1+e^{-t})^2 in log space, so that huge t underflows to 0
  // instead of producing inf * 0.
  const double log_num = s * std::log(t) - t;
  const double d = 1.0 + std::exp(-t);
  return std::exp(log_num) / (d * d);
}

}  // namespace

const char* route_name(RouteId id) {
  switch (id) {
    case RouteId::euler_even: return "euler_even";
    case RouteId::integral_general: return "integral_general";
    case RouteId::integral_posint: return "integral_posint";
    case RouteId::integral_halfint: return "integral_halfint";
    case RouteId::cotangent_odd: return "cotangent_odd";
    case RouteId::eta_series: return "eta_series";
    case RouteId::dirichlet_series: return "dirichlet_series";
  }
  return "unknown";
}

std::optional<RouteId> route_from_name(const std::string& name) {
  for (RouteId id : {RouteId::euler_even, RouteId::integral_general, RouteId::integral_posint,
                     RouteId::integral_halfint, RouteId::cotangent_odd, RouteId::eta_series,
                     RouteId::dirichlet_series}) {
    if (name == route_name(id)) return id;
  }
  // Short CLI aliases.
  if (name == "euler") return RouteId::euler_even;
  if (name == "integral") return RouteId::integral_general;
  if (name == "posint") return RouteId::integral_posint;
  if (name == "halfint") return RouteId::integral_halfint;
  if (name == "cotangent") return RouteId::cotangent_odd;
  if (name == "eta") return RouteId::eta_series;
  if (name == "dirichlet") return RouteId::dirichlet_series;
  return std::nullopt;
}

BigRational euler_even_prefactor(unsigned n) {
  if (n == 0) throw std::domain_error("euler_even: requires n >= 1");
  if (2 * n > kBernoulliCapacity) throw CapacityError("euler_even: 2n exceeds Bernoulli capacity");
  const int sign = (n % 2 == 1) ? 1 : -1;
  BigRational r = bernoulli_number(2 * n) * BigRational(BigInt(1) << (2 * n - 1), factorial(2 * n));
  return sign > 0 ? r : -r;
}

RouteResult zeta_euler_even(unsigned n) {
  RouteResult rr;
  rr.route = RouteId::euler_even;
  rr.argument = 2.0 * n;
  const double v = to_double(euler_even_prefactor(n)) * std::pow(kPi, 2.0 * n);
  rr.result.value = v;
  rr.result.abs_error = 4.0 * kEps * std::abs(v);
  rr.result.evaluations = 0;
  rr.result.converged = true;
  return rr;
}

RouteResult zeta_integral_general(double s, const QuadratureConfig& cfg) {
  if (!(s > 0.0)) throw std::domain_error("zeta_integral_general: requires s > 0");
  if (std::abs(s - 1.0) <= 1e-9)
    throw std::domain_error("zeta_integral_general: s too close to the pole at s = 1");
  const ValueWithError integral = integrate_semi_infinite(
      [s](double t) { return power_logistic_integrand(s, t); }, 0.0, cfg);
  const double denom = gamma_real(s + 1.0) * (1.0 - std::pow(2.0, 1.0 - s));
  RouteResult rr;
  rr.route = RouteId::integral_general;
  rr.argument = s;
  rr.result = integral;
  rr.result.value = integral.value / denom;
  rr.result.abs_error = (integral.abs_error + kEps * std::abs(integral.value)) / std::abs(denom) +
                        2.0 * kEps * std::abs(rr.result.value);
  return rr;
}

RouteResult zeta_integral_posint(int n, const QuadratureConfig& cfg) {
  if (n <= 1) throw std::domain_error("zeta_integral_posint: requires integer n > 1");
  const ValueWithError integral = integrate_semi_infinite(
      [n](double x) { return power_logistic_integrand(static_cast<double>(n), x); }, 0.0, cfg);
  const double denom =
      factorial(static_cast<unsigned>(n)).convert_to<double>() * (1.0 - std::pow(2.0, 1.0 - n));
  RouteResult rr;
  rr.route = RouteId::integral_posint;
  rr.argument = static_cast<double>(n);
  rr.result = integral;
  rr.result.value = integral.value / denom;
  rr.result.abs_error = (integral.abs_error + kEps * std::abs(integral.value)) / std::abs(denom) +
                        2.0 * kEps * std::abs(rr.result.value);
  return rr;
}

RouteResult zeta_integral_halfint(int n, const QuadratureConfig& cfg) {
  if (n <= 0) throw std::domain_error("zeta_integral_halfint: requires integer n >= 1");
  const double half_exponent = n - 0.5;
  const ValueWithError integral = integrate_semi_infinite(
      [half_exponent](double x) { return power_logistic_integrand(half_exponent, x); }, 0.0, cfg);
  const double denom = std::sqrt(kPi) *
                       static_cast<double>(double_factorial(2 * n - 1)) *
                       (1.0 - std::pow(2.0, -(2.0 * n - 3.0) / 2.0));
  const double scale = std::pow(2.0, n);
  RouteResult rr;
  rr.route = RouteId::integral_halfint;
  rr.argument = n - 0.5;
  rr.result = integral;
  rr.result.value = scale * integral.value / denom;
  rr.result.abs_error =
      scale * (integral.abs_error + kEps * std::abs(integral.value)) / std::abs(denom) +
      2.0 * kEps * std::abs(rr.result.value);

  // Published y-domain form over [1, inf), run loose as a cross-check.
  QuadratureConfig loose = cfg;
  loose.tol = 1e-8;
  const ValueWithError y_form = integrate_semi_infinite(
      [half_exponent](double y) {
        const double d = 1.0 + y;
        return std::pow(std::log(y), half_exponent) / (d * d);
      },
      1.0, loose);
  const double y_value = scale * y_form.value / denom;
  rr.notes = "y-domain check gap = " + std::to_string(std::abs(y_value - rr.result.value));
  rr.result.evaluations += y_form.evaluations;
  return rr;
}

double cotangent_integrand(int n, double u) {
  const unsigned odd = static_cast<unsigned>(2 * n + 1);
  if (u < 1e-8 || u > 1.0 - 1e-8) {
    // Removable singularity: B_{2n+1}(u) ~ (2n+1) B_{2n} u and
    // cot(pi u) ~ 1/(pi u); same limit at both endpoints by symmetry.
    return (2.0 * n + 1.0) * to_double(bernoulli_number(2 * static_cast<unsigned>(n))) / kPi;
  }
  return bernoulli_polynomial(odd, u) / std::tan(kPi * u);
}

RouteResult zeta_cotangent_odd(int n, const QuadratureConfig& cfg) {
  if (n <= 0) throw std::domain_error("zeta_cotangent_odd: requires integer n >= 1");
  const ValueWithError half = integrate_finite(
      [n](double u) { return cotangent_integrand(n, u); }, 0.0, 0.5, cfg);
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  const double prefactor = sign * std::pow(2.0 * kPi, 2.0 * n + 1.0) /
                           (2.0 * factorial(static_cast<unsigned>(2 * n + 1)).convert_to<double>());
  RouteResult rr;
  rr.route = RouteId::cotangent_odd;
  rr.argument = 2.0 * n + 1.0;
  rr.result = half;
  rr.result.value = prefactor * 2.0 * half.value;  // symmetry fold
  rr.result.abs_error = std::abs(prefactor) * 2.0 * (half.abs_error + kEps * std::abs(half.value)) +
                        2.0 * kEps * std::abs(rr.result.value);
  return rr;
}

RouteResult zeta_eta_route(double s, const SeriesConfig& cfg) {
  RouteResult rr;
  rr.route = RouteId::eta_series;
  rr.argument = s;
  rr.result = zeta_eta_accelerated(s, cfg);
  return rr;
}

RouteResult zeta_dirichlet_route(double s, const SeriesConfig& cfg) {
  RouteResult rr;
  rr.route = RouteId::dirichlet_series;
  rr.argument = s;
  rr.result = zeta_dirichlet(s, cfg);
  return rr;
}

std::uint64_t double_factorial(int n) {
  if (n <= 0 || n % 2 == 0)
    throw std::domain_error("double_factorial: requires odd positive n");
  if (n > 33) throw CapacityError("double_factorial: result exceeds 64 bits");
  std::uint64_t r = 1;
  for (int k = n; k >= 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

std::vector<RouteId> applicable_routes(double s) {
  std::vector<RouteId> out;
  long n = 0;
  const bool is_int = near_integer(s, n);
  long m = 0;
  const bool is_halfint = near_integer(s + 0.5, m) && !is_int;
  if (is_int && n >= 2 && n % 2 == 0) out.push_back(RouteId::euler_even);
  if (s > 0.0 && std::abs(s - 1.0) > 1e-9) out.push_back(RouteId::integral_general);
  if (is_int && n >= 2) out.push_back(RouteId::integral_posint);
  if (is_halfint && m >= 1) out.push_back(RouteId::integral_halfint);
  if (is_int && n >= 3 && n % 2 == 1) out.push_back(RouteId::cotangent_odd);
  if (s > 0.0 && std::abs(s - 1.0) > 1e-9) out.push_back(RouteId::eta_series);
  if (s > 1.0) out.push_back(RouteId::dirichlet_series);
  return out;
}

ComparisonReport compare_routes(double s, const std::vector<RouteId>& routes, double tol,
                                const QuadratureConfig& cfg,
                                const std::optional<FaultInjection>& fault) {
  if (routes.empty()) throw std::invalid_argument("compare_routes: no applicable route");
  std::vector<RouteId> ordered = routes;
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  SeriesConfig scfg;
  scfg.tol = cfg.tol;
  long n = 0;
  ComparisonReport report;
  report.argument = s;
  report.tolerance = tol;
  for (RouteId id : ordered) {
    RouteResult rr;
    switch (id) {
      case RouteId::euler_even:
        if (!near_integer(s, n) || n < 2 || n % 2 != 0)
          throw std::domain_error("compare_routes: euler_even requires even integer s >= 2");
        rr = zeta_euler_even(static_cast<unsigned>(n / 2));
        break;
      case RouteId::integral_general:
        rr = zeta_integral_general(s, cfg);
        break;
      case RouteId::integral_posint:
        if (!near_integer(s, n))
          throw std::domain_error("compare_routes: integral_posint requires integer s");
        rr = zeta_integral_posint(static_cast<int>(n), cfg);
        break;
      case RouteId::integral_halfint:
        if (!near_integer(s + 0.5, n))
          throw std::domain_error("compare_routes: integral_halfint requires half-integer s");
        rr = zeta_integral_halfint(static_cast<int>(n), cfg);
        break;
      case RouteId::cotangent_odd:
        if (!near_integer(s, n) || n < 3 || n % 2 != 1)
          throw std::domain_error("compare_routes: cotangent_odd requires odd integer s >= 3");
        rr = zeta_cotangent_odd(static_cast<int>((n - 1) / 2), cfg);
        break;
      case RouteId::eta_series:
        rr = zeta_eta_route(s, scfg);
        break;
      case RouteId::dirichlet_series:
        rr = zeta_dirichlet_route(s, scfg);
        break;
    }
    if (fault && fault->route == id) {
      rr.result.value += fault->offset;
      rr.notes += (rr.notes.empty() ? "" : "; ") + std::string("fault injected");
    }
    report.results.push_back(std::move(rr));
  }

  double gap = 0.0;
  for (size_t i = 0; i < report.results.size(); ++i)
    for (size_t j = i + 1; j < report.results.size(); ++j)
      gap = std::max(gap,
                     std::abs(report.results[i].result.value - report.results[j].result.value));
  report.max_pairwise_gap = gap;

  double err1 = 0.0, err2 = 0.0;  // two largest reported errors
  for (const RouteResult& rr : report.results) {
    const double e = rr.result.abs_error;
    if (e > err1) {
      err2 = err1;
      err1 = e;
    } else if (e > err2) {
      err2 = e;
    }
  }
  report.pass = gap <= tol + err1 + err2;
  return report;
}

}  // namespace zeta
