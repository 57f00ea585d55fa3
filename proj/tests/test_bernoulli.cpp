#include <cmath>
#include <thread>
#include <vector>

#include "doctest.h"
#include "zeta/bernoulli.hpp"
#include "zeta/errors.hpp"

using namespace zeta;

TEST_SUITE("bernoulli") {

TEST_CASE("tabulated values") {
  CHECK(bernoulli_number(0) == BigRational(1));
  CHECK(bernoulli_number(1) == BigRational(-1, 2));
  CHECK(bernoulli_number(2) == BigRational(1, 6));
  CHECK(bernoulli_number(4) == BigRational(-1, 30));
  CHECK(bernoulli_number(6) == BigRational(1, 42));
  CHECK(bernoulli_number(7) == BigRational(0));
}

TEST_CASE("capacity error above configured maximum") {
  CHECK_NOTHROW(bernoulli_number(kBernoulliCapacity));
  CHECK_THROWS_AS(bernoulli_number(kBernoulliCapacity + 1), CapacityError);
  CHECK_THROWS_AS(bernoulli_polynomial(kBernoulliCapacity + 1, 0.25), CapacityError);
}

TEST_CASE("odd-index numbers vanish exactly") {
  for (unsigned n = 1; n <= 64; ++n) CHECK(bernoulli_number(2 * n + 1) == BigRational(0));
}

TEST_CASE("even-index signs alternate") {
  for (unsigned n = 1; n <= 32; ++n) {
    const BigRational& b = bernoulli_number(2 * n);
    if (n % 2 == 1)
      CHECK(b > 0);
    else
      CHECK(b < 0);
  }
}

TEST_CASE("polynomial at zero recovers the numbers") {
  CHECK(bernoulli_polynomial(1, 0.0) == doctest::Approx(-0.5).epsilon(1e-15));
  for (unsigned n = 0; n <= 20; ++n)
    CHECK(bernoulli_polynomial(n, 0.0) ==
          doctest::Approx(to_double(bernoulli_number(n))).epsilon(1e-13));
}

TEST_CASE("odd-degree polynomials vanish at one half") {
  CHECK(std::abs(bernoulli_polynomial(3, 0.5)) < 1e-15);
}

TEST_CASE("reflection symmetry B_n(1-x) = (-1)^n B_n(x)") {
  for (unsigned n = 0; n <= 20; ++n) {
    for (int i = 0; i <= 10; ++i) {
      const double x = i / 10.0;
      const double lhs = bernoulli_polynomial(n, 1.0 - x);
      const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * bernoulli_polynomial(n, x);
      // Horner cancels against coefficients of order |B_n|, so measure the
      // error relative to that magnitude, not the (possibly tiny) result.
      const double scale =
          std::max({std::abs(lhs), std::abs(rhs), std::abs(to_double(bernoulli_number(n))), 1.0});
      CHECK(std::abs(lhs - rhs) / scale < 1e-11);
    }
  }
}

TEST_CASE("difference property B_n(1) - B_n(0)") {
  CHECK(bernoulli_polynomial(1, 1.0) - bernoulli_polynomial(1, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (unsigned n = 2; n <= 20; ++n)
    CHECK(std::abs(bernoulli_polynomial(n, 1.0) - bernoulli_polynomial(n, 0.0)) < 1e-12);
}

TEST_CASE("generating function spot check") {
  const double t = 0.25, x = 1.0 / 3.0;
  double sum = 0.0;
  double t_pow_over_fact = 1.0;
  for (unsigned n = 0; n <= 40; ++n) {
    if (n > 0) t_pow_over_fact *= t / n;
    sum += bernoulli_polynomial(n, x) * t_pow_over_fact;
  }
  const double target = t * std::exp(t * x) / (std::exp(t) - 1.0);
  CHECK(std::abs(sum - target) < 1e-12);
}

TEST_CASE("memoized table is safe under concurrent readers") {
  std::vector<std::thread> workers;
  std::vector<double> results(8, 0.0);
  for (int i = 0; i < 8; ++i)
    workers.emplace_back([i, &results] {
      double acc = 0.0;
      for (unsigned n = 0; n <= 128; ++n) acc += to_double(bernoulli_number(n));
      results[static_cast<std::size_t>(i)] = acc;
    });
  for (auto& w : workers) w.join();
  for (int i = 1; i < 8; ++i) CHECK(results[static_cast<std::size_t>(i)] == results[0]);
}

}  // TEST_SUITE
