#pragma once

// Exact rational scalar.  boost::multiprecision::cpp_rational keeps values
// reduced with a positive denominator, which is exactly the invariant the
// series engine needs.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace epath {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Serializes as "p/q", or plain "p" when the value is an integer.
inline std::string fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

template <class Real>
Real rational_cast(const Rational& r) {
  return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

template <>
inline double rational_cast<double>(const Rational& r) {
  return static_cast<double>(r);
}

}  // namespace epath
