#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matula {

// Base for every error the library throws. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (n = 0, bad exponent, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A sieve, integer-width or budget limit would be exceeded.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

// The oracle refuses trees whose distance matrix would be too large.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A value that must be integral came out fractional. Always a bug.
class InternalIntegrityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace matula
