#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matula/numeric.hpp"
#include "matula/primes.hpp"

namespace matula {

struct SelfTestOptions {
  MatulaNumber max_n = 5000;
  std::uint64_t seed = 1;
  // Stop collecting after this many failures.
  std::size_t max_failures = 20;
};

struct SelfTestReport {
  std::size_t oracle_checks = 0;
  std::size_t identity_checks = 0;
  std::size_t split_checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Recursions against the oracle, the polynomial identities, and random-split
// invariance, for every n in 1..max_n.
SelfTestReport run_selftest(const SelfTestOptions& options, PrimeTable& primes = default_primes());

// Names of the identities violated at n (empty when all hold).
class StatsEngine;
std::vector<std::string> identity_violations(StatsEngine& engine, MatulaNumber n);

}  // namespace matula
