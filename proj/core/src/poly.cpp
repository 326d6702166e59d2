#include "matula/poly.hpp"

#include <algorithm>
#include <utility>

namespace matula {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::monomial(std::size_t exponent, BigInt coeff) {
  IntPolynomial p;
  if (coeff == 0) return p;
  p.coeffs_.assign(exponent + 1, BigInt(0));
  p.coeffs_[exponent] = std::move(coeff);
  return p;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

BigInt IntPolynomial::leading_coefficient() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

BigInt IntPolynomial::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> out;
  if (coeffs_.size() > 1) {
    out.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * k);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::even_part() const {
  std::vector<BigInt> out = coeffs_;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = 0;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::odd_part() const {
  std::vector<BigInt> out = coeffs_;
  for (std::size_t k = 0; k < out.size(); k += 2) out[k] = 0;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scale_by_x(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k, BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[k].str();
    if (k == 1) {
      out += "*x";
    } else if (k > 1) {
      out += "*x^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace matula
