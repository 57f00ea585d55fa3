#include "zeta/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace zeta {

namespace {

// Lanczos coefficients for g = 607/128, N = 15 (Godfrey/Pugh).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kSqrtTwoPi = 2.5066282746310005;
constexpr double kPi = 3.141592653589793238462643383279502884;

double lanczos_core(double x) {
  // Valid for x >= 0.5.
  double a = kLanczosC[0];
  for (int i = 1; i < 15; ++i) a += kLanczosC[i] / (x - 1.0 + i);
  const double t = x + kLanczosG - 0.5;
  return kSqrtTwoPi * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_real(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_real: requires x > 0");
  if (x >= 0.5) return lanczos_core(x);
  // Reflection for small positive arguments.
  return kPi / (std::sin(kPi * x) * lanczos_core(1.0 - x));
}

}  // namespace zeta
