#ifndef ZETA_RATIONAL_HPP
#define ZETA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace zeta {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps
// values normalized: lowest terms, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

inline double to_double(const BigRational& q) { return q.template convert_to<double>(); }

}  // namespace zeta

#endif
