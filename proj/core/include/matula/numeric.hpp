#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace matula {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Positive integer naming a rooted tree. 64 bits cover everything the
// factorization budget can handle.
using MatulaNumber = std::uint64_t;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

// Parses a non-negative decimal integer; throws InvalidInput or
// CapacityExceeded (value does not fit in 64 bits).
MatulaNumber parse_matula_number(const std::string& text);

}  // namespace matula
