#ifndef ZETA_DISTRIBUTIONS_HPP
#define ZETA_DISTRIBUTIONS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zeta/quadrature.hpp"

namespace zeta {

enum class DistKind { logistic, half_logistic, elliptic_logistic };

const char* dist_name(DistKind kind);

struct DistributionSpec {
  DistKind kind = DistKind::logistic;
  double c = 0.0;  // normalization, elliptic_logistic only
};

/// Spec for a kind; computes and caches c for the elliptic family.
DistributionSpec make_spec(DistKind kind, const QuadratureConfig& cfg = {});

/// Normalization constant of the elliptic family, the reciprocal of
/// int_0^inf t^{-1/2} e^{-t}/(1+e^{-t})^2 dt. Cross-checked against the
/// substituted form 2 int_0^inf e^{-u^2}/(1+e^{-u^2})^2 du; throws if the
/// two parameterizations disagree beyond combined error bounds.
double elliptic_constant(const QuadratureConfig& cfg = {});

double pdf(const DistributionSpec& spec, double x);
double cdf(const DistributionSpec& spec, double x);

/// Inverse CDF for the two closed-form families (throws for elliptic).
double quantile(const DistributionSpec& spec, double p);

/// pi t / sin(pi t) for |t| < 1 (1 at t = 0).
double mgf_logistic_closed(double t);

/// Partial sum of the even-power series
/// 1 + sum_{n>=1} (2^{2n-1}-1) zeta(2n) / 2^{2(n-1)} * t^{2n}.
double mgf_logistic_series(double t, int n_terms);

/// 2 ln 2 for n = 1, else 2 n! (1-2^{1-n}) zeta(n).
double halflogistic_moment(int n);

/// E[X^{2m}] of the elliptic family:
/// sqrt(pi) c / 2^{2m} * (2m)!/m! * (1-2^{-(2m-3)/2}) zeta(m-1/2).
double elliptic_moment_even(int m, double c);

/// Seeded sampling. logistic and half_logistic use the inverse CDF;
/// elliptic_logistic uses rejection from a Gaussian proposal with
/// acceptance probability (1+e^{-x^2})^{-2} >= 1/4.
std::vector<double> sample(const DistributionSpec& spec, std::uint64_t seed, std::size_t n);

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

McEstimate mc_moment(const DistributionSpec& spec, int k, std::uint64_t seed, std::size_t n);

}  // namespace zeta

#endif
