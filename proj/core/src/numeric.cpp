#include "matula/numeric.hpp"

#include <charconv>

#include "matula/error.hpp"

namespace matula {

MatulaNumber parse_matula_number(const std::string& text) {
  if (text.empty()) throw InvalidInput("expected a positive integer, got an empty string");
  for (char c : text) {
    if (c < '0' || c > '9') throw InvalidInput("expected a positive integer, got '" + text + "'");
  }
  MatulaNumber value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw CapacityExceeded("integer " + text + " does not fit in 64 bits");
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInput("expected a positive integer, got '" + text + "'");
  }
  return value;
}

}  // namespace matula
