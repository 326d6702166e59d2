#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>

#include "matula/numeric.hpp"
#include "matula/poly.hpp"
#include "matula/primes.hpp"
#include "matula/stat_name.hpp"

namespace matula {

// Exponent for A_alpha and R_alpha. Integer exponents are evaluated exactly;
// anything else falls back to double arithmetic.
class Exponent {
 public:
  static Exponent integer(long long value) { return Exponent(value); }
  static Exponent real(double value);
  // "2", "-1", "-1/2", "0.5", "3/1" ... Throws InvalidInput.
  static Exponent parse(const std::string& text);

  bool is_integer() const { return std::holds_alternative<long long>(value_); }
  long long as_integer() const { return std::get<long long>(value_); }
  double as_real() const;
  std::string to_string() const;

 private:
  explicit Exponent(std::variant<long long, double> v) : value_(v) {}
  std::variant<long long, double> value_;
};

// Exact integers, exact rationals (negative integer exponents only),
// polynomials, or doubles (non-integer exponents; no exactness claim).
using StatValue = std::variant<BigInt, Rational, IntPolynomial, double>;

std::string to_string(const StatValue& value);

struct StatArgs {
  std::optional<Exponent> alpha;
  std::optional<long long> k;
};

// Default exponents when none is given: A_ALPHA uses 1 (its OEIS entry),
// R_ALPHA uses -1/2 (the classic connectivity index).
Exponent default_alpha(StatName name);

// Computes S(n) straight from n through the prime / composite case split:
// n = 1, n = p_t (recurse on t), or n = r*s (recurse on r and s).
//
// Results are memoized per engine. An engine is not synchronized: use one per
// thread. Engines may share a PrimeTable.
class StatsEngine {
 public:
  // Picks the split r*s = n for a composite n. When `prime_r` is set, r must
  // be prime (BV and TW rely on it).
  using Splitter =
      std::function<std::pair<MatulaNumber, MatulaNumber>(MatulaNumber n, const Factorization& f, bool prime_r)>;

  // Splits at r = smallest prime factor, s = n / r.
  explicit StatsEngine(PrimeTable& primes = default_primes());
  StatsEngine(PrimeTable& primes, Splitter splitter);

  // Integer statistics: V .. Z2, NK, MZ1, MZ2.
  BigInt scalar(StatName name, MatulaNumber n);
  // NK, MZ1, MZ2 via their rational recursions; integrality asserted.
  BigInt multiplicative(StatName name, MatulaNumber n);
  StatValue a_alpha(MatulaNumber n, const Exponent& alpha);
  StatValue randic(MatulaNumber n, const Exponent& alpha);
  // PWP, WP, DSP, EDP.
  IntPolynomial poly(StatName name, MatulaNumber n);
  // HYPER_W .. LEVEL_COUNT. `k` is the distance for POLARITY (default 3)
  // and the level for LEVEL_COUNT (required, >= 1).
  BigInt derived(StatName name, MatulaNumber n, std::optional<long long> k = std::nullopt);

  // Dispatches on the statistic's kind.
  StatValue compute(StatName name, MatulaNumber n, const StatArgs& args = {});

  unsigned omega(MatulaNumber n);
  std::size_t cache_size() const;
  PrimeTable& primes() { return primes_; }

 private:
  struct Key {
    StatName name;
    MatulaNumber n;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  struct AlphaKey {
    StatName name;
    MatulaNumber n;
    long long alpha;
    friend bool operator==(const AlphaKey&, const AlphaKey&) = default;
  };
  struct AlphaKeyHash {
    std::size_t operator()(const AlphaKey& k) const noexcept;
  };

  // The three shapes of tau(n).
  struct Shape {
    enum Kind { Single, Prime, Composite } kind = Single;
    MatulaNumber t = 0;  // n = p_t
    MatulaNumber r = 0;  // n = r * s
    MatulaNumber s = 0;
  };

  const Factorization& factors(MatulaNumber n);
  Shape shape(MatulaNumber n, bool prime_r = false);

  BigInt compute_scalar(StatName name, MatulaNumber n);
  BigInt compute_multiplicative(StatName name, MatulaNumber n);
  BigInt terminal_wiener(MatulaNumber n);
  IntPolynomial compute_poly(StatName name, MatulaNumber n);
  Rational exact_a(MatulaNumber n, long long alpha);
  Rational exact_randic(MatulaNumber n, long long alpha);
  double real_a(MatulaNumber n, double alpha, std::unordered_map<MatulaNumber, double>& memo);
  double real_randic(MatulaNumber n, double alpha, std::unordered_map<MatulaNumber, double>& memo_a,
                     std::unordered_map<MatulaNumber, double>& memo_r);

  PrimeTable& primes_;
  Splitter splitter_;
  std::unordered_map<MatulaNumber, Factorization> factor_cache_;
  std::unordered_map<Key, BigInt, KeyHash> ints_;
  std::unordered_map<Key, IntPolynomial, KeyHash> polys_;
  std::unordered_map<AlphaKey, Rational, AlphaKeyHash> alpha_cache_;
};

}  // namespace matula
