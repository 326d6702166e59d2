#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace matula {

enum class StatName {
  V,
  E,
  H,
  LLL,
  LV,
  MD,
  DM,
  PL,
  EPL,
  BV,
  PV,
  SP,
  VL,
  RST,
  ST,
  W,
  TW,
  Z1,
  Z2,
  NK,
  MZ1,
  MZ2,
  A_ALPHA,
  R_ALPHA,
  PWP,
  WP,
  DSP,
  EDP,
  HYPER_W,
  MULT_W,
  POLARITY,
  SUM_EVEN,
  SUM_ODD,
  EXIT_SUM,
  EXIT_MAX,
  EXIT_MAX_COUNT,
  LEVEL_COUNT,
};

enum class StatKind {
  Scalar,          // integer recursion on n
  Multiplicative,  // integer result through rational intermediates
  Parameterized,   // depends on an exponent alpha
  Polynomial,
  Derived,         // read off one of the polynomials
};

struct StatInfo {
  StatName name;
  std::string_view symbol;
  std::string_view description;
  // OEIS A-number of the sequence S(1), S(2), ...; empty when there is none.
  std::string_view oeis;
  StatKind kind;
  bool takes_k = false;
};

std::span<const StatInfo> all_stats();
const StatInfo& stat_info(StatName name);
// Case-insensitive; accepts the symbols above plus a few aliases (A, R, HYPERW, ...).
std::optional<StatName> parse_stat_name(std::string_view text);

// True when S(n) is a documented convention rather than a value the
// definition yields (LLL(1): the 1-vertex tree has no leaves).
bool is_convention_value(StatName name, unsigned long long n);

}  // namespace matula
