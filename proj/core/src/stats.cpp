#include "matula/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "matula/error.hpp"

namespace matula {
namespace {

constexpr long long kMaxExactExponent = 4096;

BigInt to_integer(const Rational& v, const char* what) {
  if (denominator(v) != 1) {
    throw InternalIntegrityError(std::string(what) + " produced the non-integral value " + matula::to_string(v));
  }
  return numerator(v);
}

Rational power(unsigned base, long long alpha) {
  if (alpha >= 0) return Rational(boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(alpha)));
  if (base == 0) throw InternalIntegrityError("0 raised to a negative exponent");
  return Rational(BigInt(1), boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(-alpha)));
}

BigInt self_power(unsigned d) { return boost::multiprecision::pow(BigInt(d), d); }

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

std::optional<long long> parse_integer(std::string_view text) {
  long long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

}  // namespace

Exponent Exponent::real(double value) {
  if (!std::isfinite(value)) throw InvalidInput("exponent must be finite");
  if (value == std::trunc(value) && std::fabs(value) <= static_cast<double>(kMaxExactExponent)) {
    return Exponent(static_cast<long long>(value));
  }
  return Exponent(value);
}

Exponent Exponent::parse(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    auto num = parse_integer(std::string_view(text).substr(0, slash));
    auto den = parse_integer(std::string_view(text).substr(slash + 1));
    if (!num || !den || *den == 0) throw InvalidInput("malformed exponent '" + text + "'");
    if (*num % *den == 0) return Exponent(*num / *den);
    return Exponent(static_cast<double>(*num) / static_cast<double>(*den));
  }
  if (auto v = parse_integer(text)) return Exponent(*v);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) throw InvalidInput("malformed exponent '" + text + "'");
  return real(v);
}

double Exponent::as_real() const {
  if (is_integer()) return static_cast<double>(as_integer());
  return std::get<double>(value_);
}

std::string Exponent::to_string() const {
  if (is_integer()) return std::to_string(as_integer());
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, ptr);
}

std::string to_string(const StatValue& value) {
  struct Visitor {
    std::string operator()(const BigInt& v) const { return v.str(); }
    std::string operator()(const Rational& v) const { return matula::to_string(v); }
    std::string operator()(const IntPolynomial& v) const { return v.to_string(); }
    std::string operator()(double v) const {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      return std::string(buf, ptr);
    }
  };
  return std::visit(Visitor{}, value);
}

Exponent default_alpha(StatName name) {
  if (name == StatName::R_ALPHA) return Exponent::real(-0.5);
  return Exponent::integer(1);
}

std::size_t StatsEngine::KeyHash::operator()(const Key& k) const noexcept {
  return mix(std::hash<MatulaNumber>{}(k.n), static_cast<std::size_t>(k.name));
}

std::size_t StatsEngine::AlphaKeyHash::operator()(const AlphaKey& k) const noexcept {
  return mix(mix(std::hash<MatulaNumber>{}(k.n), static_cast<std::size_t>(k.name)),
             std::hash<long long>{}(k.alpha));
}

StatsEngine::StatsEngine(PrimeTable& primes)
    : StatsEngine(primes, [](MatulaNumber n, const Factorization& f, bool) {
        const MatulaNumber r = f.smallest_prime();
        return std::pair{r, n / r};
      }) {}

StatsEngine::StatsEngine(PrimeTable& primes, Splitter splitter) : primes_(primes), splitter_(std::move(splitter)) {}

const Factorization& StatsEngine::factors(MatulaNumber n) {
  auto it = factor_cache_.find(n);
  if (it == factor_cache_.end()) it = factor_cache_.emplace(n, primes_.factorize(n)).first;
  return it->second;
}

unsigned StatsEngine::omega(MatulaNumber n) {
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  return factors(n).omega;
}

std::size_t StatsEngine::cache_size() const { return ints_.size() + polys_.size() + alpha_cache_.size(); }

StatsEngine::Shape StatsEngine::shape(MatulaNumber n, bool prime_r) {
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  Shape sh;
  if (n == 1) return sh;
  const Factorization& f = factors(n);
  if (f.omega == 1) {
    sh.kind = Shape::Prime;
    sh.t = primes_.prime_index(n);
    return sh;
  }
  sh.kind = Shape::Composite;
  std::tie(sh.r, sh.s) = splitter_(n, f, prime_r);
  if (sh.r < 2 || sh.s < 2 || sh.r * sh.s != n || (prime_r && omega(sh.r) != 1)) {
    throw InternalIntegrityError("invalid split of " + std::to_string(n));
  }
  return sh;
}

BigInt StatsEngine::scalar(StatName name, MatulaNumber n) {
  const StatKind kind = stat_info(name).kind;
  if (kind == StatKind::Multiplicative) return multiplicative(name, n);
  if (kind != StatKind::Scalar) {
    throw InvalidInput(std::string(stat_info(name).symbol) + " is not a scalar statistic");
  }
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  const Key key{name, n};
  if (auto it = ints_.find(key); it != ints_.end()) return it->second;
  BigInt value = compute_scalar(name, n);
  ints_.emplace(key, value);
  return value;
}

BigInt StatsEngine::compute_scalar(StatName name, MatulaNumber n) {
  using enum StatName;
  if (name == TW) return terminal_wiener(n);

  const Shape sh = shape(n, name == BV);
  auto S = [this](StatName m, MatulaNumber x) { return scalar(m, x); };
  auto O = [this](MatulaNumber x) { return BigInt(omega(x)); };
  const MatulaNumber t = sh.t;
  const MatulaNumber r = sh.r;
  const MatulaNumber s = sh.s;
  const bool single = sh.kind == Shape::Single;
  const bool prime = sh.kind == Shape::Prime;

  switch (name) {
    case V:
      if (single) return 1;
      if (prime) return 1 + S(V, t);
      return S(V, r) + S(V, s) - 1;
    case E:
      if (single) return 0;
      if (prime) return 1 + S(E, t);
      return S(E, r) + S(E, s);
    case H:
      if (single) return 0;
      if (prime) return 1 + S(H, t);
      return std::max(S(H, r), S(H, s));
    case LLL:
      // LLL(1) := 0 so that LLL(2) = 1 + LLL(1) is the 2-vertex tree's value.
      if (single) return 0;
      if (prime) return 1 + S(LLL, t);
      return std::min(S(LLL, r), S(LLL, s));
    case LV:
      if (single) return 0;
      if (n == 2) return 1;
      if (prime) return S(LV, t);
      return S(LV, r) + S(LV, s);
    case MD:
      if (single) return 0;
      if (prime) return std::max(S(MD, t), 1 + O(t));
      return std::max({S(MD, r), S(MD, s), O(r) + O(s)});
    case DM:
      if (single) return 0;
      if (prime) return std::max(S(DM, t), 1 + S(H, t));
      return std::max({S(DM, r), S(DM, s), S(H, r) + S(H, s)});
    case PL:
      if (single) return 0;
      if (prime) return S(PL, t) + S(V, t);
      return S(PL, r) + S(PL, s);
    case EPL:
      if (single) return 0;
      if (n == 2) return 1;
      if (prime) return S(EPL, t) + S(LV, t);
      return S(EPL, r) + S(EPL, s);
    case BV:
      // r is prime here, so only the root of tau(s) can turn into a new
      // branching vertex.
      if (single) return 0;
      if (prime) return S(BV, t) + (omega(t) == 2 ? 1 : 0);
      return S(BV, r) + S(BV, s) + (omega(s) == 2 ? 1 : 0);
    case PV:
      if (single) return 0;
      if (n == 2) return 2;
      if (prime) return 1 + S(LV, t);
      return S(LV, r) + S(LV, s);
    case SP:
      if (single) return 0;
      if (prime) return S(SP, t);
      return S(SP, r) + S(SP, s) + O(r) * O(s);
    case VL:
      if (single) return 1;
      if (prime) return S(VL, t) + S(V, t) + 1;
      return S(VL, r) + S(VL, s) - 1;
    case RST:
      if (single) return 1;
      if (prime) return 1 + S(RST, t);
      return S(RST, r) * S(RST, s);
    case ST:
      if (single) return 1;
      if (prime) return 1 + S(ST, t) + S(RST, t);
      return S(ST, r) + S(ST, s) + (S(RST, r) - 1) * (S(RST, s) - 1) - 1;
    case W:
      if (single) return 0;
      if (prime) return S(W, t) + S(PL, t) + S(E, t) + 1;
      return S(W, r) + S(W, s) + S(PL, r) * S(E, s) + S(PL, s) * S(E, r);
    case Z1:
      if (single) return 0;
      if (prime) return S(Z1, t) + 2 + 2 * O(t);
      return S(Z1, r) + S(Z1, s) - O(r) * O(r) - O(s) * O(s) + O(n) * O(n);
    case Z2: {
      if (single) return 0;
      auto A1 = [this](MatulaNumber x) { return to_integer(exact_a(x, 1), "A_1"); };
      if (prime) return S(Z2, t) + A1(t) + O(t) + 1;
      return S(Z2, r) + S(Z2, s) + A1(r) * O(s) + A1(s) * O(r);
    }
    default:
      break;
  }
  throw InvalidInput(std::string(stat_info(name).symbol) + " is not a scalar statistic");
}

BigInt StatsEngine::terminal_wiener(MatulaNumber n) {
  using enum StatName;
  const Shape sh = shape(n, true);
  auto S = [this](StatName m, MatulaNumber x) { return scalar(m, x); };
  if (sh.kind == Shape::Single) return 0;
  if (n == 2) return 1;
  if (sh.kind == Shape::Prime) {
    const MatulaNumber t = sh.t;
    if (omega(t) == 1) return S(TW, t) + S(LV, t);
    return S(TW, t) + S(EPL, t) + S(LV, t);
  }
  // r is prime: the root of tau(r) is pendant there and stops being pendant.
  const MatulaNumber r = sh.r;
  const MatulaNumber s = sh.s;
  BigInt value = S(TW, r) - S(EPL, r) + S(TW, s) + S(EPL, r) * S(LV, s) + S(EPL, s) * S(LV, r);
  if (omega(s) == 1) value -= S(EPL, s);
  return value;
}

BigInt StatsEngine::multiplicative(StatName name, MatulaNumber n) {
  if (stat_info(name).kind != StatKind::Multiplicative) {
    throw InvalidInput(std::string(stat_info(name).symbol) + " is not a multiplicative statistic");
  }
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  const Key key{name, n};
  if (auto it = ints_.find(key); it != ints_.end()) return it->second;
  BigInt value = compute_multiplicative(name, n);
  ints_.emplace(key, value);
  return value;
}

BigInt StatsEngine::compute_multiplicative(StatName name, MatulaNumber n) {
  using enum StatName;
  if (n == 1) return 0;
  if (n == 2) return 1;
  const Shape sh = shape(n);
  auto M = [&](MatulaNumber x) { return Rational(multiplicative(name, x)); };
  const char* symbol = stat_info(name).symbol.data();

  if (sh.kind == Shape::Prime) {
    const unsigned ot = omega(sh.t);
    const Rational grow = Rational(ot + 1, ot);
    switch (name) {
      case NK:
        return to_integer(M(sh.t) * grow, symbol);
      case MZ1:
        return to_integer(M(sh.t) * grow * grow, symbol);
      case MZ2:
        return to_integer(M(sh.t) / Rational(self_power(ot)) * Rational(self_power(ot + 1)), symbol);
      default:
        break;
    }
  } else {
    const unsigned orr = omega(sh.r);
    const unsigned os = omega(sh.s);
    const Rational join = Rational(1, orr) + Rational(1, os);
    switch (name) {
      case NK:
        return to_integer(M(sh.r) * M(sh.s) * join, symbol);
      case MZ1:
        return to_integer(M(sh.r) * M(sh.s) * join * join, symbol);
      case MZ2:
        return to_integer(M(sh.r) * M(sh.s) * Rational(self_power(orr + os)) /
                              Rational(self_power(orr) * self_power(os)),
                          symbol);
      default:
        break;
    }
  }
  throw InvalidInput(std::string(symbol) + " is not a multiplicative statistic");
}

Rational StatsEngine::exact_a(MatulaNumber n, long long alpha) {
  const AlphaKey key{StatName::A_ALPHA, n, alpha};
  if (auto it = alpha_cache_.find(key); it != alpha_cache_.end()) return it->second;
  const Shape sh = shape(n);
  Rational value;
  switch (sh.kind) {
    case Shape::Single:
      value = 0;
      break;
    case Shape::Prime:
      value = power(1 + omega(sh.t), alpha);
      break;
    case Shape::Composite:
      value = exact_a(sh.r, alpha) + exact_a(sh.s, alpha);
      break;
  }
  alpha_cache_.emplace(key, value);
  return value;
}

Rational StatsEngine::exact_randic(MatulaNumber n, long long alpha) {
  const AlphaKey key{StatName::R_ALPHA, n, alpha};
  if (auto it = alpha_cache_.find(key); it != alpha_cache_.end()) return it->second;
  const Shape sh = shape(n);
  Rational value;
  switch (sh.kind) {
    case Shape::Single:
      value = 0;
      break;
    case Shape::Prime: {
      const unsigned ot = omega(sh.t);
      value = exact_randic(sh.t, alpha) + power(1 + ot, alpha);
      // A_alpha(1) = 0, and Omega(1)^alpha is undefined for alpha < 0.
      if (sh.t != 1) value += exact_a(sh.t, alpha) * (power(1 + ot, alpha) - power(ot, alpha));
      break;
    }
    case Shape::Composite: {
      const unsigned on = omega(n);
      value = exact_randic(sh.r, alpha) + exact_randic(sh.s, alpha) +
              exact_a(sh.r, alpha) * (power(on, alpha) - power(omega(sh.r), alpha)) +
              exact_a(sh.s, alpha) * (power(on, alpha) - power(omega(sh.s), alpha));
      break;
    }
  }
  alpha_cache_.emplace(key, value);
  return value;
}

double StatsEngine::real_a(MatulaNumber n, double alpha, std::unordered_map<MatulaNumber, double>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const Shape sh = shape(n);
  double value = 0.0;
  if (sh.kind == Shape::Prime) {
    value = std::pow(1.0 + omega(sh.t), alpha);
  } else if (sh.kind == Shape::Composite) {
    value = real_a(sh.r, alpha, memo) + real_a(sh.s, alpha, memo);
  }
  memo.emplace(n, value);
  return value;
}

double StatsEngine::real_randic(MatulaNumber n, double alpha, std::unordered_map<MatulaNumber, double>& memo_a,
                                std::unordered_map<MatulaNumber, double>& memo_r) {
  if (auto it = memo_r.find(n); it != memo_r.end()) return it->second;
  const Shape sh = shape(n);
  double value = 0.0;
  if (sh.kind == Shape::Prime) {
    const double ot = omega(sh.t);
    value = real_randic(sh.t, alpha, memo_a, memo_r) + std::pow(1.0 + ot, alpha);
    if (sh.t != 1) value += real_a(sh.t, alpha, memo_a) * (std::pow(1.0 + ot, alpha) - std::pow(ot, alpha));
  } else if (sh.kind == Shape::Composite) {
    const double on = omega(n);
    value = real_randic(sh.r, alpha, memo_a, memo_r) + real_randic(sh.s, alpha, memo_a, memo_r) +
            real_a(sh.r, alpha, memo_a) * (std::pow(on, alpha) - std::pow(omega(sh.r), alpha)) +
            real_a(sh.s, alpha, memo_a) * (std::pow(on, alpha) - std::pow(omega(sh.s), alpha));
  }
  memo_r.emplace(n, value);
  return value;
}

namespace {

StatValue exact_value(const Rational& v) {
  if (denominator(v) == 1) return numerator(v);
  return v;
}

void check_exponent(const Exponent& alpha) {
  if (alpha.is_integer() && std::llabs(alpha.as_integer()) > kMaxExactExponent) {
    throw InvalidInput("integer exponent out of range (|alpha| <= " + std::to_string(kMaxExactExponent) + ")");
  }
}

}  // namespace

StatValue StatsEngine::a_alpha(MatulaNumber n, const Exponent& alpha) {
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  check_exponent(alpha);
  if (alpha.is_integer()) return exact_value(exact_a(n, alpha.as_integer()));
  std::unordered_map<MatulaNumber, double> memo;
  return real_a(n, alpha.as_real(), memo);
}

StatValue StatsEngine::randic(MatulaNumber n, const Exponent& alpha) {
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  check_exponent(alpha);
  if (alpha.is_integer()) return exact_value(exact_randic(n, alpha.as_integer()));
  std::unordered_map<MatulaNumber, double> memo_a;
  std::unordered_map<MatulaNumber, double> memo_r;
  return real_randic(n, alpha.as_real(), memo_a, memo_r);
}

IntPolynomial StatsEngine::poly(StatName name, MatulaNumber n) {
  if (stat_info(name).kind != StatKind::Polynomial) {
    throw InvalidInput(std::string(stat_info(name).symbol) + " is not a polynomial statistic");
  }
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  const Key key{name, n};
  if (auto it = polys_.find(key); it != polys_.end()) return it->second;
  IntPolynomial value = compute_poly(name, n);
  polys_.emplace(key, value);
  return value;
}

IntPolynomial StatsEngine::compute_poly(StatName name, MatulaNumber n) {
  using enum StatName;
  const Shape sh = shape(n);
  auto P = [this](StatName m, MatulaNumber x) { return poly(m, x); };
  auto xpow = [](std::size_t k) { return IntPolynomial::monomial(k); };
  auto lll = [this](MatulaNumber x) { return static_cast<std::size_t>(scalar(LLL, x)); };
  const IntPolynomial x = xpow(1);
  const MatulaNumber t = sh.t;
  const MatulaNumber r = sh.r;
  const MatulaNumber s = sh.s;
  const bool single = sh.kind == Shape::Single;
  const bool prime = sh.kind == Shape::Prime;

  switch (name) {
    case PWP:
      if (single) return {};
      if (prime) return x + P(PWP, t).scale_by_x();
      return P(PWP, r) + P(PWP, s);
    case WP:
      if (single) return {};
      if (prime) return P(WP, t) + P(PWP, t).scale_by_x() + x;
      return P(WP, r) + P(WP, s) + P(PWP, r) * P(PWP, s);
    case DSP:
      if (single) return IntPolynomial::constant(1);
      if (prime) return P(DSP, t) + xpow(omega(t)) * (x - IntPolynomial::constant(1)) + x;
      return P(DSP, r) + P(DSP, s) - xpow(omega(r)) - xpow(omega(s)) + xpow(omega(n));
    case EDP:
      if (single) return IntPolynomial::constant(1);
      if (prime) return P(EDP, t) + xpow(1 + lll(t));
      return P(EDP, r) + P(EDP, s) - xpow(std::max(lll(r), lll(s)));
    default:
      break;
  }
  throw InvalidInput(std::string(stat_info(name).symbol) + " is not a polynomial statistic");
}

BigInt StatsEngine::derived(StatName name, MatulaNumber n, std::optional<long long> k) {
  using enum StatName;
  if (stat_info(name).kind != StatKind::Derived) {
    throw InvalidInput(std::string(stat_info(name).symbol) + " is not a derived statistic");
  }
  if (n == 0) throw InvalidInput("Matula numbers start at 1");
  switch (name) {
    case HYPER_W: {
      const IntPolynomial g = poly(WP, n);
      const IntPolynomial dg = g.derivative();
      const BigInt twice = 2 * dg.eval_at_one() + dg.derivative().eval_at_one();
      if (twice % 2 != 0) throw InternalIntegrityError("hyper-Wiener index of " + std::to_string(n) + " is not integral");
      return twice / 2;
    }
    case MULT_W: {
      const IntPolynomial g = poly(WP, n);
      BigInt product = 1;
      for (std::size_t d = 2; d < g.coeffs().size(); ++d) {
        product *= boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(g.coeffs()[d]));
      }
      return product;
    }
    case POLARITY: {
      const long long distance = k.value_or(3);
      if (distance < 0) throw InvalidInput("distance k must be non-negative");
      return poly(WP, n).coefficient(static_cast<std::size_t>(distance));
    }
    case SUM_EVEN:
      return poly(WP, n).even_part().derivative().eval_at_one();
    case SUM_ODD:
      return poly(WP, n).odd_part().derivative().eval_at_one();
    case EXIT_SUM:
      return poly(EDP, n).derivative().eval_at_one();
    case EXIT_MAX:
      return poly(EDP, n).degree().value_or(0);
    case EXIT_MAX_COUNT:
      return poly(EDP, n).leading_coefficient();
    case LEVEL_COUNT: {
      if (!k) throw InvalidInput("LEVEL_COUNT needs a level k >= 1");
      if (*k < 1) throw InvalidInput("LEVEL_COUNT is defined for levels k >= 1");
      return poly(PWP, n).coefficient(static_cast<std::size_t>(*k));
    }
    default:
      break;
  }
  throw InvalidInput(std::string(stat_info(name).symbol) + " is not a derived statistic");
}

StatValue StatsEngine::compute(StatName name, MatulaNumber n, const StatArgs& args) {
  switch (stat_info(name).kind) {
    case StatKind::Scalar:
    case StatKind::Multiplicative:
      return scalar(name, n);
    case StatKind::Parameterized: {
      const Exponent alpha = args.alpha.value_or(default_alpha(name));
      return name == StatName::A_ALPHA ? a_alpha(n, alpha) : randic(n, alpha);
    }
    case StatKind::Polynomial:
      return poly(name, n);
    case StatKind::Derived:
      return derived(name, n, args.k);
  }
  throw InvalidInput("unknown statistic");
}

}  // namespace matula
