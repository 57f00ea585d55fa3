#ifndef ZETA_BERNOULLI_HPP
#define ZETA_BERNOULLI_HPP

#include "zeta/rational.hpp"

namespace zeta {

// Largest index served by the memoized table.
inline constexpr unsigned kBernoulliCapacity = 256;

/// Exact Bernoulli number B_n via the binomial recurrence
///   sum_{k=0}^{n} C(n+1,k) B_k = 0,  B_0 = 1.
/// Memoized; safe under concurrent callers. Throws CapacityError for
/// n > kBernoulliCapacity.
const BigRational& bernoulli_number(unsigned n);

/// B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^{n-k}. Coefficients are formed
/// exactly, rounded to double once, then accumulated by Horner.
double bernoulli_polynomial(unsigned n, double x);

}  // namespace zeta

#endif
