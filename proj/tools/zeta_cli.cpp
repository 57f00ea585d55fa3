// Command-line front end: evaluation, route comparison, Bernoulli tables
// and Monte Carlo validation, with machine-readable JSON/CSV output.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zeta/bernoulli.hpp"
#include "zeta/distributions.hpp"
#include "zeta/routes.hpp"
#include "zeta/version.hpp"

namespace {

using namespace zeta;

// 17 significant digits round-trips binary64.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

QuadratureConfig quad_config(double tol) {
  QuadratureConfig cfg;
  cfg.tol = tol;
  if (const char* env = std::getenv("ZETA_ROUTES_MAX_EVALS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) cfg.max_evals = v;
  }
  return cfg;
}

int default_route_eval(double s, double tol, RouteResult& out) {
  long n = std::lround(s);
  const bool is_int = std::abs(s - n) < 1e-12;
  QuadratureConfig cfg = quad_config(tol);
  SeriesConfig scfg;
  scfg.tol = tol;
  if (is_int && n >= 2 && n % 2 == 0) {
    out = zeta_euler_even(static_cast<unsigned>(n / 2));
    return 0;
  }
  (void)cfg;
  out = zeta_eta_route(s, scfg);
  return 0;
}

void print_route_record(const char* command, const RouteResult& rr, double tol) {
  std::cout << "{\"command\":\"" << command << "\",\"s\":" << fmt(rr.argument)
            << ",\"route\":\"" << route_name(rr.route) << "\",\"value\":" << fmt(rr.result.value)
            << ",\"abs_error\":" << fmt(rr.result.abs_error)
            << ",\"evaluations\":" << rr.result.evaluations
            << ",\"converged\":" << json_bool(rr.result.converged) << ",\"tol\":" << fmt(tol)
            << ",\"version\":\"" << kVersion << "\"}\n";
}

int run_eval(double s, const std::string& route_opt, double tol) {
  RouteResult rr;
  if (route_opt.empty()) {
    if (!(s > 0.0) || std::abs(s - 1.0) <= 1e-9) {
      std::cerr << "eval: s must satisfy s > 0 and s != 1 (simple pole at s = 1)\n";
      return 2;
    }
    default_route_eval(s, tol, rr);
  } else {
    const auto id = route_from_name(route_opt);
    if (!id) {
      std::cerr << "eval: unknown route '" << route_opt << "'\n";
      return 2;
    }
    const auto report = compare_routes(s, {*id}, tol, quad_config(tol));
    rr = report.results.front();
  }
  print_route_record("eval", rr, tol);
  return 0;
}

int run_compare(double s, double tol, double fault) {
  const std::vector<RouteId> routes = applicable_routes(s);
  if (routes.size() < 2) {
    std::cerr << "compare: fewer than two applicable routes for s = " << s << "\n";
    return 2;
  }
  std::optional<FaultInjection> inj;
  if (fault != 0.0) inj = FaultInjection{routes.front(), fault};
  const ComparisonReport report = compare_routes(s, routes, tol, quad_config(tol), inj);
  std::cout << "{\"command\":\"compare\",\"s\":" << fmt(s) << ",\"tolerance\":" << fmt(tol)
            << ",\"max_pairwise_gap\":" << fmt(report.max_pairwise_gap)
            << ",\"pass\":" << json_bool(report.pass) << ",\"routes\":[";
  for (size_t i = 0; i < report.results.size(); ++i) {
    const RouteResult& rr = report.results[i];
    if (i) std::cout << ",";
    std::cout << "{\"route\":\"" << route_name(rr.route) << "\",\"value\":" << fmt(rr.result.value)
              << ",\"abs_error\":" << fmt(rr.result.abs_error)
              << ",\"converged\":" << json_bool(rr.result.converged) << "}";
  }
  std::cout << "],\"version\":\"" << kVersion << "\"}\n";
  return report.pass ? 0 : 1;
}

int run_bernoulli(int n_max) {
  if (n_max < 0) {
    std::cerr << "bernoulli: n_max must be >= 0\n";
    return 2;
  }
  std::cout << "{\"command\":\"bernoulli\",\"n_max\":" << n_max << ",\"values\":[";
  for (int n = 0; n <= n_max; ++n) {
    const BigRational& b = bernoulli_number(static_cast<unsigned>(n));
    if (n) std::cout << ",";
    std::cout << "{\"n\":" << n << ",\"numerator\":\"" << numerator(b).str()
              << "\",\"denominator\":\"" << denominator(b).str() << "\"}";
  }
  std::cout << "],\"version\":\"" << kVersion << "\"}\n";
  return 0;
}

int run_mc(const std::string& dist, int k, long n, long seed) {
  DistKind kind;
  if (dist == "logistic") kind = DistKind::logistic;
  else if (dist == "half_logistic") kind = DistKind::half_logistic;
  else if (dist == "elliptic_logistic") kind = DistKind::elliptic_logistic;
  else {
    std::cerr << "mc: unknown distribution '" << dist << "'\n";
    return 2;
  }
  if (k < 1 || n < 1000) {
    std::cerr << "mc: requires k >= 1 and n >= 1000\n";
    return 2;
  }
  const DistributionSpec spec = make_spec(kind);
  double target = 0.0;
  switch (kind) {
    case DistKind::logistic:
      // Odd moments vanish by symmetry; even moments come from the MGF:
      // E[X^{2m}] = (2m)! (2^{2m-1}-1) zeta(2m) / 2^{2(m-1)}.
      target = (k % 2 == 1) ? 0.0
                            : factorial(static_cast<unsigned>(k)).convert_to<double>() *
                                  (std::pow(2.0, k - 1) - 1.0) *
                                  zeta_euler_even(static_cast<unsigned>(k / 2)).result.value /
                                  std::pow(2.0, k - 2);
      break;
    case DistKind::half_logistic:
      target = halflogistic_moment(k);
      break;
    case DistKind::elliptic_logistic:
      target = (k % 2 == 1) ? 0.0 : elliptic_moment_even(k / 2, spec.c);
      break;
  }
  const McEstimate est =
      mc_moment(spec, k, static_cast<std::uint64_t>(seed), static_cast<std::size_t>(n));
  const double z = est.stderr_ > 0.0 ? (est.mean - target) / est.stderr_ : 0.0;
  const bool pass = std::abs(z) <= 4.0;
  std::cout << "{\"command\":\"mc\",\"dist\":\"" << dist_name(kind) << "\",\"k\":" << k
            << ",\"n\":" << n << ",\"seed\":" << seed << ",\"mean\":" << fmt(est.mean)
            << ",\"stderr\":" << fmt(est.stderr_) << ",\"target\":" << fmt(target)
            << ",\"z\":" << fmt(z) << ",\"pass\":" << json_bool(pass) << ",\"version\":\""
            << kVersion << "\"}\n";
  return pass ? 0 : 1;
}

int run_table(const std::vector<double>& s_list, const std::string& format, double tol) {
  const bool csv = format == "csv";
  if (csv) std::cout << "s,route,value,abs_error,converged\n";
  for (double s : s_list) {
    if (!(s > 0.0) || std::abs(s - 1.0) <= 1e-9) {
      std::cerr << "table: s must satisfy s > 0 and s != 1, got " << s << "\n";
      return 2;
    }
    RouteResult rr;
    default_route_eval(s, tol, rr);
    if (csv) {
      std::cout << fmt(s) << "," << route_name(rr.route) << "," << fmt(rr.result.value) << ","
                << fmt(rr.result.abs_error) << "," << (rr.result.converged ? "true" : "false")
                << "\n";
    } else {
      print_route_record("table", rr, tol);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-route Riemann zeta evaluator with logistic-family validation"};
  app.require_subcommand(1);

  double s = 0.0, tol_eval = 1e-12, tol_cmp = 1e-10, fault = 0.0;
  std::string route, dist, format = "json";
  int n_max = 0, k = 1;
  long n_samples = 1000000, seed = 0;
  std::vector<double> s_list;

  auto* c_eval = app.add_subcommand("eval", "Evaluate zeta(s) via one route");
  c_eval->add_option("s", s)->required();
  c_eval->add_option("--route", route);
  c_eval->add_option("--tol", tol_eval);

  auto* c_cmp = app.add_subcommand("compare", "Cross-validate all applicable routes");
  c_cmp->add_option("s", s)->required();
  c_cmp->add_option("--tol", tol_cmp);
  c_cmp->add_option("--inject-fault", fault)->group("");  // hidden, negative testing

  auto* c_bern = app.add_subcommand("bernoulli", "Exact Bernoulli number table");
  c_bern->add_option("n_max", n_max)->required();

  auto* c_mc = app.add_subcommand("mc", "Monte Carlo moment validation");
  c_mc->add_option("dist", dist)->required();
  c_mc->add_option("--k", k)->required();
  c_mc->add_option("--n", n_samples);
  c_mc->add_option("--seed", seed);

  auto* c_table = app.add_subcommand("table", "Batch evaluation");
  c_table->add_option("s", s_list)->required();
  c_table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  c_table->add_option("--tol", tol_eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_eval->parsed()) return run_eval(s, route, tol_eval);
    if (c_cmp->parsed()) return run_compare(s, tol_cmp, fault);
    if (c_bern->parsed()) return run_bernoulli(n_max);
    if (c_mc->parsed()) return run_mc(dist, k, n_samples, seed);
    if (c_table->parsed()) return run_table(s_list, format, tol_eval);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const zeta::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
