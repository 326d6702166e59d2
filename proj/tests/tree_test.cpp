#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <random>

#include "matula/error.hpp"
#include "matula/primes.hpp"
#include "matula/tree.hpp"

using namespace matula;

namespace {

RootedTree leaf() { return RootedTree(); }
RootedTree node(std::vector<RootedTree> children) { return RootedTree(std::move(children)); }

// Same tree with every child list shuffled.
RootedTree shuffled(const RootedTree& t, std::mt19937_64& rng) {
  std::vector<RootedTree> kids;
  for (const auto& c : t.children()) kids.push_back(shuffled(c, rng));
  std::shuffle(kids.begin(), kids.end(), rng);
  return RootedTree(std::move(kids));
}

}  // namespace

TEST(Tree, DecodeSmall) {
  EXPECT_EQ(decode(1), leaf());
  EXPECT_EQ(decode(2), node({leaf()}));
  EXPECT_EQ(decode(4), node({leaf(), leaf()}));
  EXPECT_EQ(decode(4).vertex_count(), 3u);
  // 9 = p_2 * p_2: the 5-vertex path rooted at its centre.
  EXPECT_EQ(decode(9), node({node({leaf()}), node({leaf()})}));
  EXPECT_THROW(decode(0), InvalidInput);
}

TEST(Tree, DecodeWorkedExample) {
  const RootedTree t = decode(987654321);
  ASSERT_EQ(t.children().size(), 5u);
  std::vector<MatulaNumber> labels;
  for (const auto& c : t.children()) labels.push_back(encode(c));
  EXPECT_EQ(labels, (std::vector<MatulaNumber>{2, 2, 7, 7, 32277}));
  EXPECT_EQ(t.vertex_count(), 29u);
}

TEST(Tree, EncodeSmall) {
  EXPECT_EQ(encode(leaf()), 1u);
  EXPECT_EQ(encode(node({leaf()})), 2u);
  EXPECT_EQ(encode(node({leaf(), leaf()})), 4u);
}

TEST(Tree, Bijection) {
  for (MatulaNumber n = 1; n <= 5000; ++n) {
    const RootedTree t = decode(n);
    ASSERT_EQ(encode(t), n);
    ASSERT_TRUE(is_canonical(t));
    if (n >= 2) ASSERT_EQ(t.children().size(), factorize(n).omega);
  }
}

TEST(Tree, EncodeIgnoresChildOrder) {
  std::mt19937_64 rng(11);
  for (MatulaNumber n : {12u, 360u, 9699690u, 987654321u}) {
    const RootedTree t = decode(n);
    for (int i = 0; i < 5; ++i) {
      const RootedTree s = shuffled(t, rng);
      ASSERT_EQ(encode(s), n);
      ASSERT_EQ(canonicalize(s), t);
    }
  }
}

TEST(Tree, EncodeOverflowIsReported) {
  // A 40-vertex path has an astronomically large Matula number.
  RootedTree path;
  for (int i = 0; i < 40; ++i) path = node({path});
  EXPECT_THROW(encode(path), CapacityExceeded);
}

TEST(Tree, CanonicalString) {
  EXPECT_EQ(to_canonical_string(leaf()), "()");
  EXPECT_EQ(to_canonical_string(decode(4)), "(()())");
  EXPECT_EQ(encode(parse_canonical_string("(()())")), 4u);
  // Non-canonical input is reordered on output.
  EXPECT_EQ(to_canonical_string(parse_canonical_string("((())())")), "(()(()))");
}

TEST(Tree, CanonicalStringRoundTrip) {
  for (MatulaNumber n = 1; n <= 3000; ++n) {
    const RootedTree t = decode(n);
    const std::string s = to_canonical_string(t);
    ASSERT_EQ(parse_canonical_string(s), t);
    ASSERT_EQ(to_canonical_string(parse_canonical_string(s)), s);
  }
}

TEST(Tree, ParseErrorsCarryOffsets) {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_canonical_string(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string_view::npos;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of(")"), 0u);
  EXPECT_EQ(offset_of("(()"), 3u);
  EXPECT_EQ(offset_of("(()x)"), 3u);
  EXPECT_EQ(offset_of("()()"), 2u);
  EXPECT_EQ(offset_of("(() )"), 3u);
}

TEST(Tree, JsonExport) {
  const auto j = nlohmann::json::parse(to_json(decode(4)));
  EXPECT_EQ(j["matula"], "4");
  ASSERT_EQ(j["children"].size(), 2u);
  EXPECT_EQ(j["children"][0]["matula"], "1");
  EXPECT_TRUE(j["children"][0]["children"].empty());
  EXPECT_EQ(to_json(leaf()), R"({"children":[],"matula":"1"})");
}

TEST(Tree, DotExport) {
  EXPECT_EQ(to_dot(decode(4)),
            "digraph matula {\n"
            "  n0 [label=\"4\"];\n"
            "  n1 [label=\"1\"];\n"
            "  n2 [label=\"1\"];\n"
            "  n0 -> n1;\n"
            "  n0 -> n2;\n"
            "}\n");
}
