#include "matula/stat_name.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace matula {
namespace {

using enum StatKind;

constexpr std::array kStats = {
    StatInfo{StatName::V, "V", "number of vertices", "A061775", Scalar},
    StatInfo{StatName::E, "E", "number of edges", "A196050", Scalar},
    StatInfo{StatName::H, "H", "height", "A109082", Scalar},
    StatInfo{StatName::LLL, "LLL", "level of lowest leaf", "A184166", Scalar},
    StatInfo{StatName::LV, "LV", "number of leaves", "A109129", Scalar},
    StatInfo{StatName::MD, "MD", "maximum vertex degree", "A196046", Scalar},
    StatInfo{StatName::DM, "DM", "diameter", "A196058", Scalar},
    StatInfo{StatName::PL, "PL", "path length", "A196047", Scalar},
    StatInfo{StatName::EPL, "EPL", "external path length", "A196048", Scalar},
    StatInfo{StatName::BV, "BV", "number of branching vertices", "A196049", Scalar},
    StatInfo{StatName::PV, "PV", "number of pendant vertices", "A196067", Scalar},
    StatInfo{StatName::SP, "SP", "number of sibling pairs", "A196057", Scalar},
    StatInfo{StatName::VL, "VL", "visitation length", "A196068", Scalar},
    StatInfo{StatName::RST, "RST", "number of root subtrees", "A184160", Scalar},
    // Printed as "A84161" in the source; A184161 is the subtree-count sequence.
    StatInfo{StatName::ST, "ST", "number of subtrees", "A184161", Scalar},
    StatInfo{StatName::W, "W", "Wiener index", "A196051", Scalar},
    StatInfo{StatName::TW, "TW", "terminal Wiener index", "A196055", Scalar},
    StatInfo{StatName::Z1, "Z1", "first Zagreb index", "A196053", Scalar},
    StatInfo{StatName::Z2, "Z2", "second Zagreb index", "A196054", Scalar},
    StatInfo{StatName::NK, "NK", "Narumi-Katayama index", "A196063", Multiplicative},
    StatInfo{StatName::MZ1, "MZ1", "first multiplicative Zagreb index", "A196065", Multiplicative},
    StatInfo{StatName::MZ2, "MZ2", "second multiplicative Zagreb index", "A196064", Multiplicative},
    StatInfo{StatName::A_ALPHA, "A_ALPHA", "sum of deg^alpha over level-1 vertices (alpha=1: A196052)", "A196052",
             Parameterized},
    StatInfo{StatName::R_ALPHA, "R_ALPHA", "general Randic index", "", Parameterized},
    StatInfo{StatName::PWP, "PWP", "partial Wiener polynomial w.r.t. the root", "A196056", Polynomial},
    StatInfo{StatName::WP, "WP", "Wiener polynomial", "A196059", Polynomial},
    StatInfo{StatName::DSP, "DSP", "degree sequence polynomial", "A182907", Polynomial},
    StatInfo{StatName::EDP, "EDP", "exit-distance polynomial", "A184167", Polynomial},
    StatInfo{StatName::HYPER_W, "HYPER_W", "hyper-Wiener index", "A196060", Derived},
    StatInfo{StatName::MULT_W, "MULT_W", "multiplicative Wiener index", "A196061", Derived},
    StatInfo{StatName::POLARITY, "POLARITY", "Wiener polarity index (pairs at distance k, default 3)", "A184156",
             Derived, true},
    StatInfo{StatName::SUM_EVEN, "SUM_EVEN", "sum of even distances", "A184157", Derived},
    StatInfo{StatName::SUM_ODD, "SUM_ODD", "sum of odd distances", "A184158", Derived},
    StatInfo{StatName::EXIT_SUM, "EXIT_SUM", "sum of exit distances", "A184168", Derived},
    StatInfo{StatName::EXIT_MAX, "EXIT_MAX", "largest exit distance", "A184169", Derived},
    StatInfo{StatName::EXIT_MAX_COUNT, "EXIT_MAX_COUNT", "vertices attaining the largest exit distance", "A184170",
             Derived},
    StatInfo{StatName::LEVEL_COUNT, "LEVEL_COUNT", "number of vertices at level k", "", Derived, true},
};

constexpr bool table_matches_enum() {
  for (std::size_t i = 0; i < kStats.size(); ++i) {
    if (static_cast<std::size_t>(kStats[i].name) != i) return false;
  }
  return kStats.size() == static_cast<std::size_t>(StatName::LEVEL_COUNT) + 1;
}
static_assert(table_matches_enum());

struct Alias {
  std::string_view text;
  StatName name;
};

constexpr std::array kAliases = {
    Alias{"A", StatName::A_ALPHA},          Alias{"R", StatName::R_ALPHA},
    Alias{"RANDIC", StatName::R_ALPHA},     Alias{"HYPERW", StatName::HYPER_W},
    Alias{"WW", StatName::HYPER_W},         Alias{"MULTW", StatName::MULT_W},
    Alias{"WPI", StatName::POLARITY},       Alias{"LEVEL", StatName::LEVEL_COUNT},
};

}  // namespace

std::span<const StatInfo> all_stats() { return kStats; }

const StatInfo& stat_info(StatName name) { return kStats[static_cast<std::size_t>(name)]; }

std::optional<StatName> parse_stat_name(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::replace(upper.begin(), upper.end(), '-', '_');
  for (const auto& info : kStats) {
    if (info.symbol == upper) return info.name;
  }
  for (const auto& alias : kAliases) {
    if (alias.text == upper) return alias.name;
  }
  return std::nullopt;
}

bool is_convention_value(StatName name, unsigned long long n) { return name == StatName::LLL && n == 1; }

}  // namespace matula
