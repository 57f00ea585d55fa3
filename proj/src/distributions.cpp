#include "zeta/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "zeta/routes.hpp"

namespace zeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double logistic_kernel(double t) {
  // e^{-t}/(1+e^{-t})^2 for t >= 0.
  const double e = std::exp(-t);
  const double d = 1.0 + e;
  return e / (d * d);
}

double zeta_value(double s) {
  long n = std::lround(s);
  if (std::abs(s - n) < 1e-12 && n >= 2 && n % 2 == 0)
    return zeta_euler_even(static_cast<unsigned>(n / 2)).result.value;
  return zeta_eta_accelerated(s).value;
}

// Deterministic stream: mt19937_64 with explicit output mappings, so the
// sample sequences depend only on (seed, n).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Open-interval uniform: ((x >> 11) + 0.5) * 2^-53 in (0, 1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53; }

  // Box-Muller standard normal.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

const char* dist_name(DistKind kind) {
  switch (kind) {
    case DistKind::logistic: return "logistic";
    case DistKind::half_logistic: return "half_logistic";
    case DistKind::elliptic_logistic: return "elliptic_logistic";
  }
  return "unknown";
}

DistributionSpec make_spec(DistKind kind, const QuadratureConfig& cfg) {
  DistributionSpec spec;
  spec.kind = kind;
  if (kind == DistKind::elliptic_logistic) spec.c = elliptic_constant(cfg);
  return spec;
}

double elliptic_constant(const QuadratureConfig& cfg) {
  const ValueWithError direct = integrate_semi_infinite(
      [](double t) { return logistic_kernel(t) / std::sqrt(t); }, 0.0, cfg);
  const ValueWithError substituted = integrate_semi_infinite(
      [](double u) { return 2.0 * logistic_kernel(u * u); }, 0.0, cfg);
  const double gap = std::abs(direct.value - substituted.value);
  if (gap > std::max(1e-10, direct.abs_error + substituted.abs_error))
    throw std::runtime_error("elliptic_constant: parameterizations disagree by " +
                             std::to_string(gap));
  return 1.0 / direct.value;
}

double pdf(const DistributionSpec& spec, double x) {
  switch (spec.kind) {
    case DistKind::logistic:
      return logistic_kernel(std::abs(x));  // symmetric, overflow-safe
    case DistKind::half_logistic:
      return x < 0.0 ? 0.0 : 2.0 * logistic_kernel(x);
    case DistKind::elliptic_logistic:
      return spec.c * logistic_kernel(x * x);
  }
  return 0.0;
}

double cdf(const DistributionSpec& spec, double x) {
  switch (spec.kind) {
    case DistKind::logistic:
      return 1.0 / (1.0 + std::exp(-x));
    case DistKind::half_logistic: {
      if (x <= 0.0) return 0.0;
      const double e = std::exp(-x);
      return (1.0 - e) / (1.0 + e);
    }
    case DistKind::elliptic_logistic: {
      if (x == 0.0) return 0.5;
      const double c = spec.c;
      const ValueWithError half = integrate_finite(
          [c](double u) { return c * logistic_kernel(u * u); }, 0.0, std::abs(x));
      return x > 0.0 ? 0.5 + half.value : 0.5 - half.value;
    }
  }
  return 0.0;
}

double quantile(const DistributionSpec& spec, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: requires 0 < p < 1");
  switch (spec.kind) {
    case DistKind::logistic:
      return std::log(p / (1.0 - p));
    case DistKind::half_logistic:
      return std::log((1.0 + p) / (1.0 - p));
    case DistKind::elliptic_logistic:
      throw std::domain_error("quantile: no closed form for elliptic_logistic");
  }
  return 0.0;
}

double mgf_logistic_closed(double t) {
  if (!(std::abs(t) < 1.0)) throw std::domain_error("mgf_logistic_closed: requires |t| < 1");
  if (t == 0.0) return 1.0;
  return kPi * t / std::sin(kPi * t);
}

double mgf_logistic_series(double t, int n_terms) {
  if (!(std::abs(t) < 1.0)) throw std::domain_error("mgf_logistic_series: requires |t| < 1");
  if (n_terms < 1) throw std::invalid_argument("mgf_logistic_series: n_terms >= 1");
  double sum = 1.0;
  const double t2 = t * t;
  double t_pow = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    t_pow *= t2;
    const double coeff = (std::pow(2.0, 2 * n - 1) - 1.0) *
                         zeta_euler_even(static_cast<unsigned>(n)).result.value /
                         std::pow(2.0, 2 * (n - 1));
    const double term = coeff * t_pow;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double halflogistic_moment(int n) {
  if (n < 1) throw std::domain_error("halflogistic_moment: requires n >= 1");
  if (n == 1) return 2.0 * std::log(2.0);
  return 2.0 * factorial(static_cast<unsigned>(n)).convert_to<double>() *
         (1.0 - std::pow(2.0, 1.0 - n)) * zeta_value(static_cast<double>(n));
}

double elliptic_moment_even(int m, double c) {
  if (m < 1) throw std::domain_error("elliptic_moment_even: requires m >= 1");
  const double ratio = factorial(static_cast<unsigned>(2 * m)).convert_to<double>() /
                       factorial(static_cast<unsigned>(m)).convert_to<double>();
  return std::sqrt(kPi) * c / std::pow(4.0, m) * ratio *
         (1.0 - std::pow(2.0, -(2.0 * m - 3.0) / 2.0)) * zeta_value(m - 0.5);
}

std::vector<double> sample(const DistributionSpec& spec, std::uint64_t seed, std::size_t n) {
  if (n < 1) throw std::invalid_argument("sample: n >= 1");
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(n);
  switch (spec.kind) {
    case DistKind::logistic:
      for (std::size_t i = 0; i < n; ++i) {
        const double p = rng.uniform();
        out.push_back(std::log(p / (1.0 - p)));
      }
      break;
    case DistKind::half_logistic:
      for (std::size_t i = 0; i < n; ++i) {
        const double p = rng.uniform();
        out.push_back(std::log((1.0 + p) / (1.0 - p)));
      }
      break;
    case DistKind::elliptic_logistic:
      // Rejection from the Gaussian proposal ~ e^{-x^2}; the acceptance
      // probability (1+e^{-x^2})^{-2} lies in [1/4, 1).
      while (out.size() < n) {
        const double z = rng.normal() * 0.7071067811865476;  // variance 1/2
        const double d = 1.0 + std::exp(-z * z);
        if (rng.uniform() <= 1.0 / (d * d)) out.push_back(z);
      }
      break;
  }
  return out;
}

McEstimate mc_moment(const DistributionSpec& spec, int k, std::uint64_t seed, std::size_t n) {
  if (n < 1000) throw std::invalid_argument("mc_moment: requires n >= 1000");
  const std::vector<double> xs = sample(spec, seed, n);
  double mean = 0.0;
  for (double x : xs) mean += std::pow(x, k);
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) {
    const double d = std::pow(x, k) - mean;
    ss += d * d;
  }
  McEstimate est;
  est.mean = mean;
  est.stderr_ = std::sqrt(ss / (static_cast<double>(n) - 1.0) / static_cast<double>(n));
  est.n_samples = n;
  est.seed = seed;
  return est;
}

}  // namespace zeta
