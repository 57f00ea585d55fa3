#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "zeta/series.hpp"

using namespace zeta;

namespace {
constexpr double kPi = oracles::kPi;
}

TEST_SUITE("series") {

TEST_CASE("dirichlet series hits the classical even values") {
  const auto r2 = zeta_dirichlet(2.0);
  CHECK(std::abs(r2.value - kPi * kPi / 6.0) <= r2.abs_error + 1e-14);
  const auto r6 = zeta_dirichlet(6.0);
  CHECK(std::abs(r6.value - std::pow(kPi, 6) / 945.0) <= r6.abs_error + 1e-14);
}

TEST_CASE("dirichlet at s = 40 is dominated by the first terms") {
  const auto r = zeta_dirichlet(40.0);
  CHECK(std::abs(r.value - 1.0000000000009095) < 1e-15);
}

TEST_CASE("dirichlet domain errors") {
  CHECK_THROWS_AS(zeta_dirichlet(1.0), std::domain_error);
  CHECK_THROWS_AS(zeta_dirichlet(0.5), std::domain_error);
}

TEST_CASE("eta-accelerated values against the brute-force oracle") {
  // Frozen values confirmed by the partial-sum averaging oracle.
  const double zeta_half = oracles::zeta_brute_force(0.5);
  CHECK(zeta_half == doctest::Approx(-1.46035450880959).epsilon(1e-13));
  const double zeta_three = oracles::zeta_brute_force(3.0);
  CHECK(zeta_three == doctest::Approx(1.2020569031595943).epsilon(1e-14));

  const auto r2 = zeta_eta_accelerated(2.0);
  CHECK(std::abs(r2.value - kPi * kPi / 6.0) < 1e-12);
  const auto rh = zeta_eta_accelerated(0.5);
  CHECK(std::abs(rh.value - zeta_half) < 1e-12);
  const auto r3 = zeta_eta_accelerated(3.0);
  CHECK(std::abs(r3.value - zeta_three) < 1e-13);
}

TEST_CASE("eta domain and pole-proximity errors") {
  CHECK_THROWS_AS(zeta_eta_accelerated(0.0), std::domain_error);
  CHECK_THROWS_AS(zeta_eta_accelerated(-2.0), std::domain_error);
  CHECK_THROWS_AS(zeta_eta_accelerated(1.0 + 5e-10), std::domain_error);
}

TEST_CASE("dirichlet and eta agree within combined reported errors") {
  for (double s : {1.5, 2.0, 2.5, 3.0, 4.0, 6.0, 8.0}) {
    const auto d = zeta_dirichlet(s);
    const auto e = zeta_eta_accelerated(s);
    CHECK(std::abs(d.value - e.value) <= d.abs_error + e.abs_error + 1e-15);
  }
}

TEST_CASE("eta-factor identity via a second, slower acceleration") {
  for (double s = 0.25; s <= 5.0; s += 0.25) {
    if (std::abs(s - 1.0) < 0.05) continue;
    const double lhs = (1.0 - std::pow(2.0, 1.0 - s)) * zeta_eta_accelerated(s).value;
    const double rhs = oracles::eta_brute_force(s);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("values decrease monotonically toward 1 for growing s") {
  double prev = std::numeric_limits<double>::infinity();
  for (double s : {5.0, 10.0, 20.0, 40.0}) {
    const auto r = zeta_eta_accelerated(s);
    CHECK(r.value > 1.0);
    CHECK(r.value < prev);
    prev = r.value;
  }
}

TEST_CASE("odd-denominator split identity") {
  for (double s : {2.0, 3.0, 4.0}) {
    const double lhs = (1.0 - std::pow(2.0, -s)) * zeta_eta_accelerated(s).value;
    const long n_terms = 100000;
    double odd_sum = 0.0;
    for (long n = n_terms; n >= 1; --n) odd_sum += std::pow(2.0 * n - 1.0, -s);
    // Tail bound: int_{N}^inf (2x-1)^{-s} dx = (2N-1)^{1-s} / (2(s-1)).
    const double tail = std::pow(2.0 * n_terms - 1.0, 1.0 - s) / (2.0 * (s - 1.0));
    CHECK(std::abs(lhs - odd_sum) <= 1.1 * tail);
  }
}

TEST_CASE("(s-1) zeta(s) approaches 1 near the pole") {
  for (int k = 1; k <= 6; ++k) {
    const double eps = std::pow(10.0, -k);
    const double v = (eps)*zeta_eta_accelerated(1.0 + eps).value;
    CHECK(std::abs(v - 1.0) < 10.0 * eps);
  }
}

}  // TEST_SUITE
