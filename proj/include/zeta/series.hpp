#ifndef ZETA_SERIES_HPP
#define ZETA_SERIES_HPP

#include "zeta/quadrature.hpp"

namespace zeta {

struct SeriesConfig {
  double tol = 1e-12;
  long max_terms = 10'000'000;
};

/// Dirichlet series sum_{n>=1} n^{-s} for s > 1, with an integral tail
/// correction; the reported abs_error never exceeds the raw tail bound
/// N^{1-s}/(s-1). Throws std::domain_error for s <= 1.
ValueWithError zeta_dirichlet(double s, const SeriesConfig& cfg = {});

/// Eta-form evaluation for s > 0, s != 1: the alternating series is
/// accelerated with the Chebyshev (3+sqrt(8))^n scheme and divided by
/// (1 - 2^{1-s}); the conditioning of that division is folded into the
/// reported abs_error. Throws std::domain_error for s <= 0 and when
/// |s - 1| <= 1e-9.
ValueWithError zeta_eta_accelerated(double s, const SeriesConfig& cfg = {});

/// The accelerated alternating sum sum_{n>=1} (-1)^{n+1} n^{-s} itself,
/// without the eta-to-zeta factor.
ValueWithError eta_alternating_sum(double s, const SeriesConfig& cfg = {});

}  // namespace zeta

#endif
