// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "matula/oracle.hpp"
#include "matula/primes.hpp"
#include "matula/stats.hpp"
#include "matula/tree.hpp"

using namespace matula;
using enum StatName;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kRandicRelTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::pair<int, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

// 1. EDP(987654321) = 15 + 9x + 5x^2 in under a second, sieve grown on demand.
Outcome edp_worked_example() {
  Outcome o;
  auto start = Clock::now();
  const auto [code, text] = cli({"stat", "EDP", "987654321"});
  const double cli_time = seconds_since(start);
  if (code != 0 || text != "15 + 9*x + 5*x^2\n") o.fail("CLI printed '" + text + "'");

  start = Clock::now();
  PrimeTable small({.initial_bound = 1000, .ceiling = 1'000'000'000});
  StatsEngine engine(small);
  const IntPolynomial edp = engine.poly(EDP, 987654321);
  const double lib_time = seconds_since(start);
  if (edp != IntPolynomial{15, 9, 5}) o.fail("library EDP = " + edp.to_string());
  if (small.sieved_limit() < 379721) o.fail("sieve did not grow past 379721");
  if (cli_time >= 1.0 || lib_time >= 1.0) o.fail("too slow");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("cli ") + std::to_string(cli_time) + " s, lazy sieve " +
              std::to_string(lib_time) + " s";
  return o;
}

// 2. 987654321 = 3^2 * 17^2 * 379721, Omega = 5; 379721 = p_32277.
Outcome worked_factorization() {
  Outcome o;
  const Factorization f = factorize(987654321);
  const std::vector<PrimePower> expected = {{3, 2}, {17, 2}, {379721, 1}};
  if (f.factors != expected) o.fail("wrong factors");
  if (f.omega != 5) o.fail("omega = " + std::to_string(f.omega));
  if (prime_index(379721) != 32277) o.fail("prime_index(379721) wrong");
  return o;
}

// 3. DSP(9) = 2x + 3x^2.
Outcome dsp_of_path() {
  Outcome o;
  StatsEngine engine;
  if (engine.poly(DSP, 9) != IntPolynomial{0, 2, 3}) o.fail("DSP(9) = " + engine.poly(DSP, 9).to_string());
  if (decode(9).vertex_count() != 5) o.fail("decode(9) is not 5 vertices");
  return o;
}

// 4. encode(decode(n)) = n for n <= 100000 within 30 s.
Outcome bijection() {
  Outcome o;
  const auto start = Clock::now();
  for (MatulaNumber n = 1; n <= 100000; ++n) {
    if (encode(decode(n)) != n) {
      o.fail("round trip fails at n = " + std::to_string(n));
      break;
    }
  }
  const double t = seconds_since(start);
  if (t >= 30.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(t) + " s";
  return o;
}

// 5. Every statistic, recursion vs oracle, n <= 5000.
Outcome oracle_equivalence() {
  Outcome o;
  StatsEngine engine;
  std::size_t checks = 0;
  for (MatulaNumber n = 1; n <= 5000 && o.pass; ++n) {
    const oracle::TreeAnalysis a = oracle::analyze(decode(n));
    for (const auto& info : all_stats()) {
      for (const auto& args : oracle::check_arguments(info.name, a.size())) {
        ++checks;
        const StatValue rec = engine.compute(info.name, n, args);
        const StatValue ref = oracle::oracle_stat(info.name, a, args);
        if (!oracle::values_agree(rec, ref, kRandicRelTol)) {
          o.fail(std::string(info.symbol) + "(" + std::to_string(n) + "): " + to_string(rec) + " vs oracle " +
                 to_string(ref));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " comparisons";
  return o;
}

// 6. Identities between statistics, n <= 5000.
Outcome identities() {
  Outcome o;
  StatsEngine engine;
  for (MatulaNumber n = 1; n <= 5000 && o.pass; ++n) {
    auto S = [&](StatName name) { return engine.scalar(name, n); };
    auto check = [&](bool ok, const char* what) {
      if (!ok) o.fail(std::string(what) + " at n = " + std::to_string(n));
    };
    const IntPolynomial f = engine.poly(PWP, n);
    const IntPolynomial g = engine.poly(WP, n);
    const IntPolynomial h = engine.poly(DSP, n);
    const IntPolynomial m = engine.poly(EDP, n);
    auto deg = [](const IntPolynomial& p) { return BigInt(p.degree().value_or(0)); };

    check(S(E) == S(V) - 1, "E = V - 1");
    check(S(MZ1) == S(NK) * S(NK), "MZ1 = NK^2");
    check(engine.randic(n, Exponent::integer(1)) == StatValue(S(Z2)), "R_1 = Z2");
    check(S(H) == deg(f), "H = deg PWP");
    check(S(E) == f.eval_at_one(), "E = PWP(1)");
    check(S(PL) == f.derivative().eval_at_one(), "PL = PWP'(1)");
    check(S(DM) == deg(g), "DM = deg WP");
    check(S(W) == g.derivative().eval_at_one(), "W = WP'(1)");
    check(S(V) == h.eval_at_one(), "V = DSP(1)");
    check(S(MD) == deg(h), "MD = deg DSP");
    check(S(PV) == h.coefficient(1), "PV = [x]DSP");
    if (n >= 2) {
      check(S(BV) == h.eval_at_one() - h.coefficient(1) - h.coefficient(2), "BV = DSP(1) - [x]DSP - [x^2]DSP");
    } else {
      // DSP(1) = 1 counts the isolated root at degree 0.
      check(S(BV) == h.eval_at_one() - h.coefficient(0) - h.coefficient(1) - h.coefficient(2),
            "BV = DSP(1) - [x^0]DSP - [x]DSP - [x^2]DSP");
    }
    check(engine.derived(SUM_EVEN, n) + engine.derived(SUM_ODD, n) == S(W), "SUM_EVEN + SUM_ODD = W");
    for (std::size_t k = 1; k < m.coeffs().size(); ++k) {
      check(m.coeffs()[k] <= m.coeffs()[k - 1], "EDP coefficients nonincreasing");
    }
    const IntPolynomial dg = g.derivative();
    const BigInt twice = 2 * dg.eval_at_one() + dg.derivative().eval_at_one();
    check(twice % 2 == 0 && twice / 2 == engine.derived(HYPER_W, n), "hyper-Wiener integrality");
  }
  return o;
}

// 7. Split invariance on 1000 random composites below 10^6.
Outcome split_invariance() {
  Outcome o;
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<MatulaNumber> pick(4, 1'000'000);
  std::size_t tested = 0;
  while (tested < 1000 && o.pass) {
    const MatulaNumber n = pick(rng);
    if (factorize(n).omega < 2) continue;
    ++tested;
    std::string detail;
    if (!oracle::random_split_check(n, rng(), &detail)) o.fail(detail);
  }
  if (o.pass) o.detail = std::to_string(tested) + " composites";
  return o;
}

// 8. ST and RST against connected-subset enumeration, n <= 2000, V(n) <= 14.
Outcome subtree_brute_force() {
  Outcome o;
  StatsEngine engine;
  std::size_t tested = 0;
  for (MatulaNumber n = 1; n <= 2000 && o.pass; ++n) {
    if (engine.scalar(V, n) > 14) continue;
    ++tested;
    const oracle::SubtreeCounts brute = oracle::enumerate_subtrees(oracle::analyze(decode(n)));
    if (engine.scalar(ST, n) != brute.all) o.fail("ST(" + std::to_string(n) + ")");
    if (engine.scalar(RST, n) != brute.with_root) o.fail("RST(" + std::to_string(n) + ")");
  }
  if (o.pass) o.detail = std::to_string(tested) + " trees";
  return o;
}

// 9. `verify` against the oracle-generated b-file fixtures.
Outcome bfile_verification() {
  Outcome o;
  const std::string dir = MATULA_TEST_DATA_DIR;
  for (const auto& [name, file] : {std::pair{"V", "/A061775.oracle.txt"}, std::pair{"E", "/A196050.oracle.txt"}}) {
    std::ifstream in(dir + file);
    std::string header;
    std::getline(in, header);
    std::string label;
    std::getline(in, label);
    if (label.find("ORACLE-DERIVED") == std::string::npos) o.fail(std::string(file) + " is not labelled");
    const auto [code, text] = cli({"verify", name, dir + file});
    if (code != 0 || text != std::string("OK ") + name + ": 100 terms match (n = 1..100)\n") {
      o.fail(std::string(name) + ": " + text);
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 EDP(987654321) = 15 + 9x + 5x^2 in < 1 s", edp_worked_example},
      {"AC2 factorize(987654321), prime_index(379721) = 32277", worked_factorization},
      {"AC3 DSP(9) = 2x + 3x^2", dsp_of_path},
      {"AC4 encode(decode(n)) = n for n <= 100000 in < 30 s", bijection},
      {"AC5 recursion = oracle for every statistic, n <= 5000", oracle_equivalence},
      {"AC6 identity suite, n <= 5000", identities},
      {"AC7 split invariance, 1000 random composites <= 10^6", split_invariance},
      {"AC8 ST/RST vs subset enumeration, n <= 2000, V <= 14", subtree_brute_force},
      {"AC9 verify V and E against oracle b-file fixtures", bfile_verification},
  };
  int failed = 0;
  for (const auto& [title, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << title;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
