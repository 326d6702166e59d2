#include "matula/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <queue>
#include <random>

#include "matula/error.hpp"

namespace matula::oracle {
namespace {

constexpr std::uint32_t kUnreached = ~std::uint32_t{0};

void flatten(const RootedTree& tree, std::optional<std::size_t> parent, std::size_t level,
             std::vector<VertexInfo>& out) {
  const std::size_t id = out.size();
  out.push_back({});
  out[id].level = level;
  out[id].parent = parent;
  if (parent) out[*parent].children.push_back(id);
  for (const auto& child : tree.children()) flatten(child, id, level + 1, out);
}

// Label leaves 0, then the unlabelled parents of k-labelled vertices k + 1.
void label_exit_distances(std::vector<VertexInfo>& vertices) {
  std::vector<bool> labelled(vertices.size(), false);
  std::vector<std::size_t> frontier;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].is_leaf) {
      vertices[v].exit_distance = 0;
      labelled[v] = true;
      frontier.push_back(v);
    }
  }
  // The 1-vertex tree has no leaves; its root gets 0.
  if (frontier.empty()) {
    vertices[0].exit_distance = 0;
    return;
  }
  for (std::size_t k = 1; !frontier.empty(); ++k) {
    std::vector<std::size_t> next;
    for (std::size_t v : frontier) {
      const auto p = vertices[v].parent;
      if (p && !labelled[*p]) {
        labelled[*p] = true;
        vertices[*p].exit_distance = k;
        next.push_back(*p);
      }
    }
    frontier = std::move(next);
  }
}

Rational exact_power(std::size_t base, long long alpha) {
  if (alpha >= 0) return Rational(boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(alpha)));
  return Rational(BigInt(1), boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(-alpha)));
}

StatValue simplify(const Rational& v) {
  if (denominator(v) == 1) return numerator(v);
  return v;
}

template <class Pred>
BigInt count_if_vertex(const TreeAnalysis& a, Pred pred) {
  BigInt count = 0;
  for (const auto& v : a.vertices) {
    if (pred(v)) ++count;
  }
  return count;
}

// Calls f(d) for the distance of every unordered pair {i, j}, i != j.
template <class F>
void for_each_pair(const TreeAnalysis& a, F f) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) f(i, j, a.distance(i, j));
  }
}

}  // namespace

TreeAnalysis analyze(const RootedTree& tree, std::size_t max_vertices) {
  const std::size_t count = tree.vertex_count();
  if (count > max_vertices) {
    throw BudgetExceeded("tree has " + std::to_string(count) + " vertices, oracle budget is " +
                         std::to_string(max_vertices));
  }
  TreeAnalysis a;
  a.vertices.reserve(count);
  flatten(tree, std::nullopt, 0, a.vertices);

  std::vector<std::vector<std::size_t>> adjacency(count);
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t c : a.vertices[v].children) {
      a.edges.push_back({v, c});
      adjacency[v].push_back(c);
      adjacency[c].push_back(v);
    }
  }
  for (std::size_t v = 0; v < count; ++v) {
    a.vertices[v].degree = adjacency[v].size();
    a.vertices[v].is_leaf = count > 1 && a.vertices[v].children.empty();
  }
  label_exit_distances(a.vertices);

  a.distances.assign(count * count, kUnreached);
  std::queue<std::size_t> queue;
  for (std::size_t source = 0; source < count; ++source) {
    std::uint32_t* row = &a.distances[source * count];
    row[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t w : adjacency[u]) {
        if (row[w] == kUnreached) {
          row[w] = row[u] + 1;
          queue.push(w);
        }
      }
    }
  }
  return a;
}

SubtreeCounts enumerate_subtrees(const TreeAnalysis& a) {
  const std::size_t n = a.size();
  if (n > 24) throw BudgetExceeded("subset enumeration is limited to 24 vertices");
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const auto& e : a.edges) {
    adjacency[e.parent].push_back(e.child);
    adjacency[e.child].push_back(e.parent);
  }
  SubtreeCounts counts{0, 0};
  std::vector<std::size_t> stack;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const std::size_t start = static_cast<std::size_t>(std::countr_zero(mask));
    std::uint32_t seen = std::uint32_t{1} << start;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adjacency[u]) {
        const std::uint32_t bit = std::uint32_t{1} << w;
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          stack.push_back(w);
        }
      }
    }
    if (seen == mask) {
      ++counts.all;
      if (mask & 1u) ++counts.with_root;
    }
  }
  return counts;
}

SubtreeCounts count_subtrees_by_children(const TreeAnalysis& a) {
  // Preorder puts every child after its parent, so a reverse sweep sees
  // children first.
  std::vector<BigInt> topped(a.size(), BigInt(1));
  for (std::size_t v = a.size(); v-- > 0;) {
    for (std::size_t c : a.vertices[v].children) topped[v] *= 1 + topped[c];
  }
  SubtreeCounts counts{0, topped[0]};
  for (const auto& c : topped) counts.all += c;
  return counts;
}

StatValue oracle_stat(StatName name, const RootedTree& tree, const StatArgs& args) {
  return oracle_stat(name, analyze(tree), args);
}

StatValue oracle_stat(StatName name, const TreeAnalysis& a, const StatArgs& args) {
  using enum StatName;
  const auto& vs = a.vertices;
  const bool single = a.size() == 1;

  switch (name) {
    case V:
      return BigInt(a.size());
    case E:
      return BigInt(a.edges.size());
    case H: {
      std::size_t h = 0;
      for (const auto& v : vs) h = std::max(h, v.level);
      return BigInt(h);
    }
    case LLL: {
      std::optional<std::size_t> low;
      for (const auto& v : vs) {
        if (v.is_leaf) low = std::min(low.value_or(v.level), v.level);
      }
      return BigInt(low.value_or(0));
    }
    case LV:
      return count_if_vertex(a, [](const VertexInfo& v) { return v.is_leaf; });
    case MD: {
      std::size_t d = 0;
      for (const auto& v : vs) d = std::max(d, v.degree);
      return BigInt(d);
    }
    case DM: {
      std::uint32_t d = 0;
      for (auto x : a.distances) d = std::max(d, x);
      return BigInt(d);
    }
    case PL: {
      BigInt sum = 0;
      for (const auto& v : vs) sum += v.level;
      return sum;
    }
    case EPL: {
      BigInt sum = 0;
      for (const auto& v : vs) {
        if (v.is_leaf) sum += v.level;
      }
      return sum;
    }
    case BV:
      return count_if_vertex(a, [](const VertexInfo& v) { return v.degree >= 3; });
    case PV:
      return count_if_vertex(a, [](const VertexInfo& v) { return v.degree == 1; });
    case SP: {
      BigInt sum = 0;
      for (const auto& v : vs) {
        const std::size_t c = v.children.size();
        if (c >= 2) sum += c * (c - 1) / 2;
      }
      return sum;
    }
    case VL: {
      BigInt sum = a.size();
      for (const auto& v : vs) sum += v.level;
      return sum;
    }
    case RST:
    case ST: {
      const SubtreeCounts c =
          a.size() <= kSubsetEnumerationLimit ? enumerate_subtrees(a) : count_subtrees_by_children(a);
      return name == ST ? c.all : c.with_root;
    }
    case W: {
      BigInt sum = 0;
      for_each_pair(a, [&](std::size_t, std::size_t, std::uint32_t d) { sum += d; });
      return sum;
    }
    case TW: {
      BigInt sum = 0;
      for_each_pair(a, [&](std::size_t i, std::size_t j, std::uint32_t d) {
        if (vs[i].degree == 1 && vs[j].degree == 1) sum += d;
      });
      return sum;
    }
    case Z1: {
      BigInt sum = 0;
      for (const auto& v : vs) sum += v.degree * v.degree;
      return sum;
    }
    case Z2: {
      BigInt sum = 0;
      for (const auto& e : a.edges) sum += vs[e.parent].degree * vs[e.child].degree;
      return sum;
    }
    case NK:
    case MZ1: {
      BigInt product = 1;
      for (const auto& v : vs) product *= v.degree;
      return name == NK ? product : BigInt(product * product);
    }
    case MZ2: {
      // Vertex form prod deg^deg; the edge form is checked against it in tests.
      if (single) return BigInt(0);
      BigInt product = 1;
      for (const auto& v : vs) product *= boost::multiprecision::pow(BigInt(v.degree), static_cast<unsigned>(v.degree));
      return product;
    }
    case A_ALPHA:
    case R_ALPHA: {
      const Exponent alpha = args.alpha.value_or(default_alpha(name));
      std::vector<std::size_t> terms;
      if (name == A_ALPHA) {
        for (const auto& v : vs) {
          if (v.level == 1) terms.push_back(v.degree);
        }
      } else {
        for (const auto& e : a.edges) terms.push_back(vs[e.parent].degree * vs[e.child].degree);
      }
      if (alpha.is_integer()) {
        Rational sum = 0;
        for (auto b : terms) sum += exact_power(b, alpha.as_integer());
        return simplify(sum);
      }
      double sum = 0.0;
      for (auto b : terms) sum += std::pow(static_cast<double>(b), alpha.as_real());
      return sum;
    }
    case PWP: {
      std::vector<BigInt> c;
      for (const auto& v : vs) {
        if (v.level == 0) continue;
        if (c.size() <= v.level) c.resize(v.level + 1);
        c[v.level] += 1;
      }
      return IntPolynomial(std::move(c));
    }
    case WP: {
      std::vector<BigInt> c;
      for_each_pair(a, [&](std::size_t, std::size_t, std::uint32_t d) {
        if (c.size() <= d) c.resize(d + 1);
        c[d] += 1;
      });
      return IntPolynomial(std::move(c));
    }
    case DSP:
    case EDP: {
      std::vector<BigInt> c;
      for (const auto& v : vs) {
        const std::size_t e = name == DSP ? v.degree : v.exit_distance;
        if (c.size() <= e) c.resize(e + 1);
        c[e] += 1;
      }
      return IntPolynomial(std::move(c));
    }
    case HYPER_W: {
      BigInt twice = 0;
      for_each_pair(a, [&](std::size_t, std::size_t, std::uint32_t d) { twice += BigInt(d) * d + d; });
      return BigInt(twice / 2);
    }
    case MULT_W: {
      BigInt product = 1;
      for_each_pair(a, [&](std::size_t, std::size_t, std::uint32_t d) { product *= d; });
      return product;
    }
    case POLARITY: {
      const long long k = args.k.value_or(3);
      if (k < 0) throw InvalidInput("distance k must be non-negative");
      BigInt count = 0;
      for_each_pair(a, [&](std::size_t, std::size_t, std::uint32_t d) {
        if (d == static_cast<unsigned long long>(k)) ++count;
      });
      return count;
    }
    case SUM_EVEN:
    case SUM_ODD: {
      const std::uint32_t parity = name == SUM_ODD ? 1 : 0;
      BigInt sum = 0;
      for_each_pair(a, [&](std::size_t, std::size_t, std::uint32_t d) {
        if (d % 2 == parity) sum += d;
      });
      return sum;
    }
    case EXIT_SUM: {
      BigInt sum = 0;
      for (const auto& v : vs) sum += v.exit_distance;
      return sum;
    }
    case EXIT_MAX:
    case EXIT_MAX_COUNT: {
      std::size_t top = 0;
      for (const auto& v : vs) top = std::max(top, v.exit_distance);
      if (name == EXIT_MAX) return BigInt(top);
      return count_if_vertex(a, [top](const VertexInfo& v) { return v.exit_distance == top; });
    }
    case LEVEL_COUNT: {
      if (!args.k || *args.k < 1) throw InvalidInput("LEVEL_COUNT is defined for levels k >= 1");
      const auto k = static_cast<std::size_t>(*args.k);
      return count_if_vertex(a, [k](const VertexInfo& v) { return v.level == k; });
    }
  }
  throw InvalidInput("unknown statistic");
}

bool values_agree(const StatValue& lhs, const StatValue& rhs, double rel_tol) {
  if (lhs.index() != rhs.index()) return false;
  if (const double* x = std::get_if<double>(&lhs)) {
    const double y = std::get<double>(rhs);
    return std::fabs(*x - y) <= rel_tol * (1.0 + std::fabs(y));
  }
  return lhs == rhs;
}

StatsEngine make_random_split_engine(std::uint64_t seed, PrimeTable& primes) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return StatsEngine(primes, [rng](MatulaNumber n, const Factorization& f, bool prime_r) {
    if (prime_r) {
      std::uniform_int_distribution<std::size_t> pick(0, f.factors.size() - 1);
      const MatulaNumber r = f.factors[pick(*rng)].prime;
      return std::pair{r, n / r};
    }
    std::vector<MatulaNumber> divisors{1};
    for (const auto& [p, k] : f.factors) {
      const std::size_t before = divisors.size();
      MatulaNumber power = 1;
      for (unsigned i = 0; i < k; ++i) {
        power *= p;
        for (std::size_t j = 0; j < before; ++j) divisors.push_back(divisors[j] * power);
      }
    }
    std::erase_if(divisors, [n](MatulaNumber d) { return d == 1 || d == n; });
    std::sort(divisors.begin(), divisors.end());
    std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
    const MatulaNumber r = divisors[pick(*rng)];
    return std::pair{r, n / r};
  });
}

std::vector<StatArgs> check_arguments(StatName name, std::size_t max_k) {
  std::vector<StatArgs> out;
  switch (stat_info(name).kind) {
    case StatKind::Parameterized:
      for (long long a : {1, 2, 0, -1, -2}) out.push_back({Exponent::integer(a), std::nullopt});
      out.push_back({Exponent::real(-0.5), std::nullopt});
      out.push_back({Exponent::real(0.5), std::nullopt});
      break;
    case StatKind::Derived:
      if (name == StatName::POLARITY) {
        out.push_back({});
        for (std::size_t k = 0; k <= max_k; ++k) out.push_back({std::nullopt, static_cast<long long>(k)});
      } else if (name == StatName::LEVEL_COUNT) {
        for (std::size_t k = 1; k <= std::max<std::size_t>(max_k, 1); ++k) {
          out.push_back({std::nullopt, static_cast<long long>(k)});
        }
      } else {
        out.push_back({});
      }
      break;
    default:
      out.push_back({});
      break;
  }
  return out;
}

bool random_split_check(MatulaNumber n, std::uint64_t seed, std::string* detail, PrimeTable& primes) {
  StatsEngine canonical(primes);
  StatsEngine shuffled = make_random_split_engine(seed, primes);
  const auto max_k = static_cast<std::size_t>(canonical.scalar(StatName::V, n));
  for (const auto& info : all_stats()) {
    for (const auto& args : check_arguments(info.name, max_k)) {
      const StatValue expected = canonical.compute(info.name, n, args);
      const StatValue actual = shuffled.compute(info.name, n, args);
      if (!values_agree(actual, expected)) {
        if (detail) {
          *detail = std::string(info.symbol) + "(" + std::to_string(n) + "): smallest-prime split gives " +
                    to_string(expected) + ", random split gives " + to_string(actual);
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace matula::oracle
