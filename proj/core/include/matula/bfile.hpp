#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matula/numeric.hpp"

namespace matula {

struct BFileEntry {
  std::int64_t index = 0;
  BigInt value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

// OEIS b-file: one "index value" pair per line, indices strictly increasing.
// Lines starting with '#' and blank lines are skipped.
struct BFile {
  std::vector<BFileEntry> entries;

  // Throws ParseError with the byte offset of the offending token.
  static BFile parse(std::string_view text);
  static BFile read(const std::string& path);

  // Exactly "index value\n" per entry.
  std::string to_string() const;
};

struct BFileMismatch {
  std::int64_t index = 0;
  BigInt expected;  // from the file
  BigInt actual;    // computed
};

struct BFileVerification {
  std::size_t checked = 0;
  std::optional<BFileMismatch> first_mismatch;

  bool ok() const { return !first_mismatch.has_value(); }
};

// Compares the first `limit` entries (all when unset) against `compute`,
// stopping at the first mismatch.
BFileVerification verify_bfile(const BFile& file, const std::function<BigInt(std::int64_t)>& compute,
                               std::optional<std::size_t> limit = std::nullopt);

}  // namespace matula
