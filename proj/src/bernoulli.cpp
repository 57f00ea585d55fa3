#include "zeta/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

struct Table {
  std::mutex mu;
  std::vector<BigRational> values;  // reserved once, references stay valid
  Table() {
    values.reserve(kBernoulliCapacity + 1);
    values.emplace_back(1);  // B_0
  }
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

const BigRational& bernoulli_number(unsigned n) {
  if (n > kBernoulliCapacity)
    throw CapacityError("bernoulli_number: index " + std::to_string(n) +
                        " exceeds table capacity " + std::to_string(kBernoulliCapacity));
  Table& t = table();
  std::lock_guard lock(t.mu);
  while (t.values.size() <= n) {
    const unsigned m = static_cast<unsigned>(t.values.size());
    // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1,k) B_k
    BigRational s = 0;
    for (unsigned k = 0; k < m; ++k) s += BigRational(binomial(m + 1, k)) * t.values[k];
    t.values.push_back(-s / (m + 1));
  }
  return t.values[n];
}

double bernoulli_polynomial(unsigned n, double x) {
  if (n > kBernoulliCapacity)
    throw CapacityError("bernoulli_polynomial: degree exceeds table capacity");
  // Descending powers: coefficient of x^(n-k) is C(n,k) B_k.
  double acc = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    const BigRational c = BigRational(binomial(n, k)) * bernoulli_number(k);
    acc = acc * x + to_double(c);
  }
  return acc;
}

}  // namespace zeta
