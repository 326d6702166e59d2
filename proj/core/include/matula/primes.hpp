#pragma once

#include <cstdint>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "matula/numeric.hpp"

namespace matula {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization of a positive integer: factors ascending by prime,
// omega = total multiplicity, counted with repetition.
struct Factorization {
  std::vector<PrimePower> factors;
  unsigned omega = 0;

  bool is_prime() const { return omega == 1; }
  std::uint64_t smallest_prime() const { return factors.empty() ? 0 : factors.front().prime; }
  // Recomposes the product; throws CapacityExceeded on 64-bit overflow.
  std::uint64_t value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct SieveConfig {
  std::uint64_t initial_bound = 1'000'000;
  std::uint64_t ceiling = 1'000'000'000;
};

// Lazily grown table of primes backed by a segmented sieve of Eratosthenes.
//
// Readers take a shared lock; growth is serialized under an exclusive lock,
// so one table can serve many threads.
class PrimeTable {
 public:
  explicit PrimeTable(SieveConfig config = {});

  PrimeTable(const PrimeTable&) = delete;
  PrimeTable& operator=(const PrimeTable&) = delete;

  // p_m, with p_1 = 2.
  std::uint64_t nth_prime(std::uint64_t m);
  // Order m of the prime p, i.e. nth_prime(m) == p. Throws NotPrime.
  std::uint64_t prime_index(std::uint64_t p);
  bool is_prime(std::uint64_t n);
  Factorization factorize(std::uint64_t n);

  // Largest integer currently covered by the sieve.
  std::uint64_t sieved_limit() const;
  std::uint64_t ceiling() const { return config_.ceiling; }

 private:
  void ensure_limit(std::uint64_t bound);
  void ensure_count(std::uint64_t count);
  void grow_locked(std::uint64_t bound);

  SieveConfig config_;
  mutable std::shared_mutex mutex_;
  std::uint64_t limit_ = 1;
  std::vector<std::uint32_t> primes_;
};

// Process-wide table with the default configuration.
PrimeTable& default_primes();

inline std::uint64_t nth_prime(std::uint64_t m) { return default_primes().nth_prime(m); }
inline std::uint64_t prime_index(std::uint64_t p) { return default_primes().prime_index(p); }
inline Factorization factorize(std::uint64_t n) { return default_primes().factorize(n); }

}  // namespace matula
