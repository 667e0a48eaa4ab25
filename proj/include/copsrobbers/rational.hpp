#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace copsrobbers {

// Exact arbitrary-precision rational used by every weight ledger.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// base^exp with 0^0 == 1; negative exponents invert.
inline Rational pow(const Rational& base, int exp) {
  Rational result = 1;
  for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) result *= base;
  return exp < 0 ? Rational(1) / result : result;
}

inline BigInt floor(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

inline std::string to_string(const Rational& x) { return x.str(); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

// Exact value of a finite double.
inline Rational from_double(double x) {
  return Rational(x);
}

}  // namespace copsrobbers
