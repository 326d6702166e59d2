#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "matula/numeric.hpp"

namespace matula {

// Dense polynomial in x with exact integer coefficients, lowest degree first.
// Stored normalized: the highest stored coefficient is never zero, and the
// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(std::size_t exponent, BigInt coeff = 1);
  static IntPolynomial constant(BigInt c) { return monomial(0, std::move(c)); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  // [x^k]; zero above the degree.
  BigInt coefficient(std::size_t k) const;
  BigInt leading_coefficient() const;

  BigInt eval_at_one() const;
  IntPolynomial derivative() const;
  IntPolynomial even_part() const;
  IntPolynomial odd_part() const;
  // Multiplies by x^k.
  IntPolynomial scale_by_x(std::size_t k = 1) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // "c0 + c1*x + c2*x^2", zero terms omitted, "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

}  // namespace matula
