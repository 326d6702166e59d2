#include <gtest/gtest.h>

#include <cmath>

#include "matula/error.hpp"
#include "matula/oracle.hpp"
#include "matula/stats.hpp"

using namespace matula;
using enum StatName;

namespace {

BigInt S(StatName name, MatulaNumber n) {
  StatsEngine engine;
  return engine.scalar(name, n);
}

}  // namespace

TEST(Stats, BaseCases) {
  EXPECT_EQ(S(V, 1), 1);
  EXPECT_EQ(S(E, 1), 0);
  EXPECT_EQ(S(VL, 1), 1);
  EXPECT_EQ(S(RST, 1), 1);
  EXPECT_EQ(S(ST, 1), 1);
  EXPECT_EQ(S(LLL, 1), 0);
  EXPECT_TRUE(is_convention_value(LLL, 1));
  EXPECT_FALSE(is_convention_value(LLL, 2));
  EXPECT_EQ(S(TW, 2), 1);
  EXPECT_EQ(S(PV, 2), 2);
  EXPECT_EQ(S(LV, 2), 1);
  EXPECT_EQ(S(EPL, 2), 1);
}

TEST(Stats, MultiplicativeBaseCases) {
  StatsEngine engine;
  for (StatName name : {NK, MZ1, MZ2}) {
    EXPECT_EQ(engine.multiplicative(name, 1), 0);
    EXPECT_EQ(engine.multiplicative(name, 2), 1);
  }
}

// Expected values below were computed by the oracle on decode(n) and frozen.
TEST(Stats, FiveVertexPath) {
  StatsEngine engine;
  EXPECT_EQ(engine.scalar(W, 9), 20);
  EXPECT_EQ(engine.scalar(NK, 9), 8);
  EXPECT_EQ(engine.scalar(MZ1, 9), 64);
  EXPECT_EQ(engine.scalar(DM, 9), 4);
  EXPECT_EQ(engine.derived(POLARITY, 9, 3), 2);
  EXPECT_EQ(engine.derived(POLARITY, 9), 2);
  EXPECT_EQ(engine.poly(DSP, 9), (IntPolynomial{0, 2, 3}));
  const double r = std::get<double>(engine.randic(9, Exponent::real(-0.5)));
  EXPECT_NEAR(r, 2.414213562373095, 1e-9);
}

TEST(Stats, ThreeVertexStar) {
  StatsEngine engine;
  EXPECT_EQ(engine.poly(WP, 4), (IntPolynomial{0, 2, 1}));
  EXPECT_EQ(std::get<BigInt>(engine.a_alpha(4, Exponent::integer(1))), 2);
  EXPECT_EQ(engine.scalar(ST, 4), 6);
  EXPECT_EQ(engine.scalar(RST, 4), 4);
  EXPECT_EQ(engine.scalar(TW, 4), 2);
}

TEST(Stats, AAlphaAndRandicBasics) {
  StatsEngine engine;
  EXPECT_EQ(std::get<BigInt>(engine.a_alpha(1, Exponent::integer(1))), 0);
  EXPECT_EQ(std::get<BigInt>(engine.a_alpha(2, Exponent::integer(3))), 1);
  EXPECT_DOUBLE_EQ(std::get<double>(engine.randic(2, Exponent::real(-0.5))), 1.0);
  // P5 with alpha = -1: edges (2,2),(2,2),(2,1),(2,1) give 1/4+1/4+1/2+1/2.
  EXPECT_EQ(std::get<Rational>(engine.randic(9, Exponent::integer(-1))), Rational(3, 2));
  for (MatulaNumber n = 1; n <= 500; ++n) {
    ASSERT_EQ(engine.randic(n, Exponent::integer(1)), StatValue(engine.scalar(Z2, n)));
  }
}

TEST(Stats, WorkedExamplePolynomials) {
  StatsEngine engine;
  EXPECT_EQ(engine.poly(EDP, 987654321), (IntPolynomial{15, 9, 5}));
  EXPECT_EQ(engine.scalar(V, 987654321), 29);
  EXPECT_EQ(engine.derived(EXIT_MAX, 987654321), 2);
  EXPECT_EQ(engine.derived(EXIT_MAX_COUNT, 987654321), 5);
  EXPECT_EQ(engine.derived(EXIT_SUM, 987654321), 19);
  EXPECT_EQ(engine.poly(PWP, 1), IntPolynomial());
  EXPECT_EQ(engine.poly(EDP, 1), IntPolynomial::constant(1));
  EXPECT_EQ(engine.poly(DSP, 1), IntPolynomial::constant(1));
}

TEST(Stats, DerivedEdgeCases) {
  StatsEngine engine;
  EXPECT_EQ(engine.derived(MULT_W, 1), 1);
  EXPECT_EQ(engine.derived(MULT_W, 9), 2 * 2 * 2 * 3 * 3 * 4);
  EXPECT_EQ(engine.derived(HYPER_W, 1), 0);
  EXPECT_EQ(engine.derived(LEVEL_COUNT, 987654321, 1), 5);
  EXPECT_THROW(engine.derived(LEVEL_COUNT, 4), InvalidInput);
  EXPECT_THROW(engine.derived(LEVEL_COUNT, 4, 0), InvalidInput);
  EXPECT_THROW(engine.derived(POLARITY, 4, -1), InvalidInput);
}

TEST(Stats, InvalidInputs) {
  StatsEngine engine;
  EXPECT_THROW(engine.scalar(V, 0), InvalidInput);
  EXPECT_THROW(engine.poly(WP, 0), InvalidInput);
  EXPECT_THROW(engine.scalar(WP, 5), InvalidInput);
  EXPECT_THROW(engine.poly(V, 5), InvalidInput);
  EXPECT_THROW(engine.multiplicative(V, 5), InvalidInput);
  EXPECT_THROW(engine.a_alpha(0, Exponent::integer(1)), InvalidInput);
  EXPECT_THROW(engine.randic(5, Exponent::integer(1'000'000)), InvalidInput);
}

TEST(Stats, MemoizedMatchesCold) {
  StatsEngine warm;
  for (MatulaNumber n = 1; n <= 300; ++n) {
    for (const auto& info : all_stats()) {
      for (const auto& args : oracle::check_arguments(info.name, 4)) warm.compute(info.name, n, args);
    }
  }
  const std::size_t cached = warm.cache_size();
  EXPECT_GT(cached, 0u);
  for (MatulaNumber n : {7u, 64u, 97u, 210u, 299u}) {
    for (const auto& info : all_stats()) {
      for (const auto& args : oracle::check_arguments(info.name, 4)) {
        StatsEngine cold;
        ASSERT_TRUE(oracle::values_agree(cold.compute(info.name, n, args), warm.compute(info.name, n, args)))
            << info.symbol << "(" << n << ")";
      }
    }
  }
  // Repeated queries are served from the cache.
  EXPECT_EQ(warm.cache_size(), cached);
}

TEST(Stats, LargeArgument) {
  StatsEngine engine;
  // 2^62: a star with 62 leaves.
  const MatulaNumber n = 1ull << 62;
  EXPECT_EQ(engine.scalar(V, n), 63);
  EXPECT_EQ(engine.scalar(MD, n), 62);
  EXPECT_EQ(engine.scalar(MZ2, n), boost::multiprecision::pow(BigInt(62), 62));
  EXPECT_EQ(engine.scalar(W, n), 62 + 62 * 61);
}

TEST(Exponent, Parse) {
  EXPECT_TRUE(Exponent::parse("2").is_integer());
  EXPECT_EQ(Exponent::parse("-1").as_integer(), -1);
  EXPECT_EQ(Exponent::parse("4/2").as_integer(), 2);
  EXPECT_FALSE(Exponent::parse("-1/2").is_integer());
  EXPECT_DOUBLE_EQ(Exponent::parse("-1/2").as_real(), -0.5);
  EXPECT_DOUBLE_EQ(Exponent::parse("0.25").as_real(), 0.25);
  EXPECT_TRUE(Exponent::parse("3.0").is_integer());
  EXPECT_THROW(Exponent::parse("abc"), InvalidInput);
  EXPECT_THROW(Exponent::parse("1/0"), InvalidInput);
  EXPECT_THROW(Exponent::parse(""), InvalidInput);
}

TEST(StatNames, ParseCaseInsensitive) {
  EXPECT_EQ(parse_stat_name("edp"), EDP);
  EXPECT_EQ(parse_stat_name("Z2"), Z2);
  EXPECT_EQ(parse_stat_name("hyper_w"), HYPER_W);
  EXPECT_EQ(parse_stat_name("r"), R_ALPHA);
  EXPECT_FALSE(parse_stat_name("nope").has_value());
  for (const auto& info : all_stats()) EXPECT_EQ(parse_stat_name(info.symbol), info.name);
  EXPECT_EQ(stat_info(ST).oeis, "A184161");
}
