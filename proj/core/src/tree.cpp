#include "matula/tree.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <utility>

#include "matula/error.hpp"

namespace matula {
namespace {

constexpr std::size_t kMaxParseDepth = 100'000;

MatulaNumber checked_mul(MatulaNumber a, MatulaNumber b) {
  MatulaNumber out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityExceeded("Matula number does not fit in 64 bits");
  return out;
}

// Canonical copy of `tree`; also reports its Matula number.
RootedTree canonical_with_number(const RootedTree& tree, PrimeTable& primes, MatulaNumber& number) {
  std::vector<std::pair<MatulaNumber, RootedTree>> kids;
  kids.reserve(tree.children().size());
  for (const auto& child : tree.children()) {
    MatulaNumber m = 0;
    RootedTree c = canonical_with_number(child, primes, m);
    kids.emplace_back(m, std::move(c));
  }
  std::stable_sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  number = 1;
  std::vector<RootedTree> children;
  children.reserve(kids.size());
  for (auto& [m, c] : kids) {
    number = checked_mul(number, primes.nth_prime(m));
    children.push_back(std::move(c));
  }
  return RootedTree(std::move(children));
}

void write_parens(const RootedTree& tree, std::string& out) {
  out += '(';
  for (const auto& child : tree.children()) write_parens(child, out);
  out += ')';
}

nlohmann::json json_of(const RootedTree& tree, PrimeTable& primes) {
  auto children = nlohmann::json::array();
  for (const auto& child : tree.children()) children.push_back(json_of(child, primes));
  return {{"matula", std::to_string(encode(tree, primes))}, {"children", std::move(children)}};
}

std::size_t write_dot(const RootedTree& tree, PrimeTable& primes, std::size_t& next_id, std::ostream& nodes,
                      std::ostream& edges) {
  const std::size_t id = next_id++;
  nodes << "  n" << id << " [label=\"" << encode(tree, primes) << "\"];\n";
  for (const auto& child : tree.children()) {
    const std::size_t child_id = write_dot(child, primes, next_id, nodes, edges);
    edges << "  n" << id << " -> n" << child_id << ";\n";
  }
  return id;
}

}  // namespace

std::size_t RootedTree::vertex_count() const {
  std::size_t count = 1;
  for (const auto& child : children_) count += child.vertex_count();
  return count;
}

RootedTree decode(MatulaNumber n, PrimeTable& primes) {
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  if (n == 1) return RootedTree();
  // Primes ascend, so their orders ascend too: children come out canonical.
  std::vector<RootedTree> children;
  for (const auto& [p, k] : primes.factorize(n).factors) {
    RootedTree child = decode(primes.prime_index(p), primes);
    for (unsigned i = 1; i < k; ++i) children.push_back(child);
    children.push_back(std::move(child));
  }
  return RootedTree(std::move(children));
}

MatulaNumber encode(const RootedTree& tree, PrimeTable& primes) {
  MatulaNumber n = 1;
  for (const auto& child : tree.children()) n = checked_mul(n, primes.nth_prime(encode(child, primes)));
  return n;
}

RootedTree canonicalize(const RootedTree& tree, PrimeTable& primes) {
  MatulaNumber ignored = 0;
  return canonical_with_number(tree, primes, ignored);
}

bool is_canonical(const RootedTree& tree, PrimeTable& primes) { return canonicalize(tree, primes) == tree; }

std::string to_canonical_string(const RootedTree& tree, PrimeTable& primes) {
  std::string out;
  write_parens(canonicalize(tree, primes), out);
  return out;
}

RootedTree parse_canonical_string(std::string_view text) {
  if (text.empty()) throw ParseError("expected '('", 0);
  // One pending child list per open paren.
  std::vector<std::vector<RootedTree>> open;
  std::optional<RootedTree> done;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (done) throw ParseError("trailing input after tree", i);
    if (c == '(') {
      if (open.size() >= kMaxParseDepth) throw ParseError("tree nested too deeply", i);
      open.emplace_back();
    } else if (c == ')') {
      if (open.empty()) throw ParseError("unbalanced ')'", i);
      RootedTree t(std::move(open.back()));
      open.pop_back();
      if (open.empty()) {
        done = std::move(t);
      } else {
        open.back().push_back(std::move(t));
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (!done) throw ParseError("unterminated tree, missing ')'", text.size());
  return std::move(*done);
}

std::string to_json(const RootedTree& tree, PrimeTable& primes) {
  return json_of(canonicalize(tree, primes), primes).dump();
}

std::string to_dot(const RootedTree& tree, PrimeTable& primes) {
  std::ostringstream nodes;
  std::ostringstream edges;
  std::size_t next_id = 0;
  write_dot(canonicalize(tree, primes), primes, next_id, nodes, edges);
  return "digraph matula {\n" + nodes.str() + edges.str() + "}\n";
}

}  // namespace matula
