#include "zeta/rational.hpp"

namespace zeta {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // divides exactly: r is C(n, i+1) times an integer
  }
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace zeta
