#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mwsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Rationals print as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Divides by two, refusing to round.
inline BigInt exact_half(const BigInt& v) {
  if (v % 2 != 0) {
    throw std::domain_error("inexact halving of " + v.str());
  }
  return v / 2;
}

}  // namespace mwsp
