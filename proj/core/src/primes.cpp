#include "matula/primes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "matula/error.hpp"

namespace matula {
namespace {

constexpr std::uint64_t kSegmentSize = 1u << 18;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

// Upper bound on p_m (Rosser) for m >= 6; small m by table.
std::uint64_t nth_prime_upper_bound(std::uint64_t m) {
  if (m < 6) return 13;
  const double x = static_cast<double>(m);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, k] : factors) {
    for (unsigned i = 0; i < k; ++i) {
      if (__builtin_mul_overflow(v, p, &v)) throw CapacityExceeded("factorization product overflows 64 bits");
    }
  }
  return v;
}

PrimeTable::PrimeTable(SieveConfig config) : config_(config) {
  if (config_.ceiling >= std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidInput("sieve ceiling must be below 2^32");
  }
  config_.initial_bound = std::min(config_.initial_bound, config_.ceiling);
  std::unique_lock lock(mutex_);
  grow_locked(std::max<std::uint64_t>(config_.initial_bound, 2));
}

std::uint64_t PrimeTable::sieved_limit() const {
  std::shared_lock lock(mutex_);
  return limit_;
}

void PrimeTable::ensure_limit(std::uint64_t bound) {
  if (bound > config_.ceiling) {
    throw CapacityExceeded("sieve bound " + std::to_string(bound) + " exceeds ceiling " +
                           std::to_string(config_.ceiling));
  }
  {
    std::shared_lock lock(mutex_);
    if (limit_ >= bound) return;
  }
  std::unique_lock lock(mutex_);
  if (limit_ >= bound) return;
  // Geometric growth keeps repeated small extensions amortized.
  grow_locked(std::min(std::max(bound, 2 * limit_), config_.ceiling));
}

void PrimeTable::ensure_count(std::uint64_t count) {
  {
    std::shared_lock lock(mutex_);
    if (primes_.size() >= count) return;
  }
  ensure_limit(std::min(nth_prime_upper_bound(count), config_.ceiling));
  std::shared_lock lock(mutex_);
  if (primes_.size() < count) {
    throw CapacityExceeded("prime number " + std::to_string(count) + " lies beyond the sieve ceiling " +
                           std::to_string(config_.ceiling));
  }
}

void PrimeTable::grow_locked(std::uint64_t bound) {
  if (bound <= limit_) return;
  const std::uint64_t root = isqrt(bound);
  if (root > limit_) grow_locked(root);

  std::vector<char> composite;
  for (std::uint64_t lo = limit_ + 1; lo <= bound; lo += kSegmentSize) {
    const std::uint64_t hi = std::min(bound, lo + kSegmentSize - 1);
    composite.assign(hi - lo + 1, 0);
    for (std::uint64_t p : primes_) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m <= hi; m += p) composite[m - lo] = 1;
    }
    for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= hi; ++v) {
      if (!composite[v - lo]) primes_.push_back(static_cast<std::uint32_t>(v));
    }
  }
  limit_ = bound;
}

std::uint64_t PrimeTable::nth_prime(std::uint64_t m) {
  if (m == 0) throw InvalidInput("prime order must be at least 1");
  ensure_count(m);
  std::shared_lock lock(mutex_);
  return primes_[m - 1];
}

std::uint64_t PrimeTable::prime_index(std::uint64_t p) {
  if (p < 2) throw NotPrime(std::to_string(p) + " is not prime");
  ensure_limit(p);
  std::shared_lock lock(mutex_);
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) throw NotPrime(std::to_string(p) + " is not prime");
  return static_cast<std::uint64_t>(it - primes_.begin()) + 1;
}

bool PrimeTable::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  {
    std::shared_lock lock(mutex_);
    if (n <= limit_) return std::binary_search(primes_.begin(), primes_.end(), n);
  }
  return factorize(n).is_prime();
}

Factorization PrimeTable::factorize(std::uint64_t n) {
  if (n == 0) throw InvalidInput("cannot factorize 0");
  Factorization f;
  if (n == 1) return f;

  const std::uint64_t root = isqrt(n);
  ensure_limit(std::min(root, config_.ceiling));

  std::shared_lock lock(mutex_);
  std::uint64_t rest = n;
  for (std::uint64_t p : primes_) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    unsigned k = 0;
    do {
      rest /= p;
      ++k;
    } while (rest % p == 0);
    f.factors.push_back({p, k});
    f.omega += k;
  }
  if (rest > 1) {
    // Every prime up to the sieve limit has been tried; rest is prime only if
    // no untried prime could still divide it.
    const std::uint64_t tried = std::min(limit_, root);
    if (tried < isqrt(rest)) {
      throw CapacityExceeded("factorizing " + std::to_string(n) + " needs primes beyond the sieve ceiling");
    }
    f.factors.push_back({rest, 1});
    f.omega += 1;
  }
  return f;
}

PrimeTable& default_primes() {
  static PrimeTable table;
  return table;
}

}  // namespace matula
