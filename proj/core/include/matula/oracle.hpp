#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matula/numeric.hpp"
#include "matula/primes.hpp"
#include "matula/stat_name.hpp"
#include "matula/stats.hpp"
#include "matula/tree.hpp"

// Ground truth for the recursions in stats.hpp: every statistic is computed
// from an explicit tree using only the textbook definitions (BFS distances,
// degrees, levels, exit labels). Nothing here calls into StatsEngine except
// random_split_check, which compares two engines with each other.
namespace matula::oracle {

struct VertexInfo {
  std::size_t level = 0;
  std::size_t degree = 0;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  bool is_leaf = false;
  std::size_t exit_distance = 0;
};

struct Edge {
  std::size_t parent = 0;
  std::size_t child = 0;
};

// Vertices in DFS preorder (root = 0) with a full BFS distance matrix.
struct TreeAnalysis {
  std::vector<VertexInfo> vertices;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> distances;  // row-major, size() == V * V

  std::size_t size() const { return vertices.size(); }
  std::uint32_t distance(std::size_t i, std::size_t j) const { return distances[i * vertices.size() + j]; }
};

inline constexpr std::size_t kDefaultVertexBudget = 10'000;
// Above this many vertices subtree counts switch from subset enumeration to
// the children-product recurrence.
inline constexpr std::size_t kSubsetEnumerationLimit = 16;

// Throws BudgetExceeded for trees with more than `max_vertices` vertices.
TreeAnalysis analyze(const RootedTree& tree, std::size_t max_vertices = kDefaultVertexBudget);

struct SubtreeCounts {
  BigInt all;           // connected vertex subsets (ST)
  BigInt with_root;     // those containing the root (RST)
};

// Brute force over all 2^V vertex subsets; V must be at most 24.
SubtreeCounts enumerate_subtrees(const TreeAnalysis& analysis);
// Counts subtrees topped at each vertex v as prod(1 + count(child)).
SubtreeCounts count_subtrees_by_children(const TreeAnalysis& analysis);

// Definitional value of `name` on the analysed tree. For the 1-vertex tree
// the values mirror the recursions' base cases (LLL = 0, MZ2 = 0).
StatValue oracle_stat(StatName name, const TreeAnalysis& analysis, const StatArgs& args = {});
StatValue oracle_stat(StatName name, const RootedTree& tree, const StatArgs& args = {});

// Exact values must be equal; doubles within rel_tol * (1 + |value|).
bool values_agree(const StatValue& lhs, const StatValue& rhs, double rel_tol = 1e-9);

// Engine whose composite splits are drawn uniformly at random: any nontrivial
// divisor pair, or any prime factor as r when the recursion needs r prime.
StatsEngine make_random_split_engine(std::uint64_t seed, PrimeTable& primes = default_primes());

// The argument sets each statistic is checked with (several alphas, every
// level or distance up to max_k).
std::vector<StatArgs> check_arguments(StatName name, std::size_t max_k);

// Recomputes every statistic of n with random splits and compares against the
// smallest-prime-factor split. On mismatch, `detail` names the statistic.
bool random_split_check(MatulaNumber n, std::uint64_t seed, std::string* detail = nullptr,
                        PrimeTable& primes = default_primes());

}  // namespace matula::oracle
