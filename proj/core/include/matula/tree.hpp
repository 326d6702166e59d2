#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "matula/numeric.hpp"
#include "matula/primes.hpp"

namespace matula {

// A rooted tree as a recursive list of child subtrees. Values are immutable
// once built and cheap to share by const reference.
class RootedTree {
 public:
  RootedTree() = default;
  explicit RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {}

  const std::vector<RootedTree>& children() const { return children_; }
  bool is_single_vertex() const { return children_.empty(); }
  std::size_t vertex_count() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<RootedTree> children_;
};

// tau(n): the rooted tree whose Matula number is n, children in canonical order.
RootedTree decode(MatulaNumber n, PrimeTable& primes = default_primes());

// mu(t): product of p_{mu(child)} over the root's children.
MatulaNumber encode(const RootedTree& tree, PrimeTable& primes = default_primes());

// Children sorted ascending by Matula number, recursively.
RootedTree canonicalize(const RootedTree& tree, PrimeTable& primes = default_primes());
bool is_canonical(const RootedTree& tree, PrimeTable& primes = default_primes());

// Paren format: tree := "(" tree* ")", children in canonical order.
std::string to_canonical_string(const RootedTree& tree, PrimeTable& primes = default_primes());
// Accepts children in any order; ParseError carries the byte offset.
RootedTree parse_canonical_string(std::string_view text);

// {"matula": "<decimal>", "children": [...]}
std::string to_json(const RootedTree& tree, PrimeTable& primes = default_primes());
// Directed parent -> child edges, nodes labelled with their subtree's Matula number.
std::string to_dot(const RootedTree& tree, PrimeTable& primes = default_primes());

}  // namespace matula
