#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace diamcount {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial_big(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Natural log of a positive big integer, accurate to a few ulp.  The top 53
/// bits are converted exactly; the discarded tail contributes < 2^-52.
inline double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: argument must be positive");
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 53) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 53;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * 0.6931471805599453094;
}

inline double log_big(const BigRat& x) {
  return log_big(boost::multiprecision::numerator(x)) -
         log_big(boost::multiprecision::denominator(x));
}

/// Number of decimal digits, without materializing the decimal string.
inline std::size_t decimal_digits(const BigInt& x) {
  if (x == 0) return 1;
  const BigInt a = boost::multiprecision::abs(x);
  const double est = (boost::multiprecision::msb(a) + 1) * 0.30102999566398119521;
  return static_cast<std::size_t>(est) + 1;
}

}  // namespace diamcount
