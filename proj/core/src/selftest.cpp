#include "matula/selftest.hpp"

#include "matula/oracle.hpp"
#include "matula/stats.hpp"
#include "matula/tree.hpp"

namespace matula {

std::vector<std::string> identity_violations(StatsEngine& engine, MatulaNumber n) {
  using enum StatName;
  std::vector<std::string> bad;
  auto S = [&](StatName name) { return engine.scalar(name, n); };
  auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  const IntPolynomial f = engine.poly(PWP, n);
  const IntPolynomial g = engine.poly(WP, n);
  const IntPolynomial h = engine.poly(DSP, n);
  const IntPolynomial m = engine.poly(EDP, n);

  expect(S(E) == S(V) - 1, "E = V - 1");
  expect(S(MZ1) == S(NK) * S(NK), "MZ1 = NK^2");
  expect(engine.randic(n, Exponent::integer(1)) == StatValue(S(Z2)), "R_1 = Z2");
  expect(BigInt(f.degree().value_or(0)) == S(H), "H = deg PWP");
  expect(f.eval_at_one() == S(E), "E = PWP(1)");
  expect(f.derivative().eval_at_one() == S(PL), "PL = PWP'(1)");
  expect(BigInt(g.degree().value_or(0)) == S(DM), "DM = deg WP");
  expect(g.derivative().eval_at_one() == S(W), "W = WP'(1)");
  expect(h.eval_at_one() == S(V), "V = DSP(1)");
  expect(BigInt(h.degree().value_or(0)) == S(MD), "MD = deg DSP");
  expect(h.coefficient(1) == S(PV), "PV = [x]DSP");
  // [x^0]DSP is nonzero only for the 1-vertex tree, whose root has degree 0.
  expect(h.eval_at_one() - h.coefficient(0) - h.coefficient(1) - h.coefficient(2) == S(BV),
         "BV = DSP(1) - [x^0]DSP - [x]DSP - [x^2]DSP");
  expect(engine.derived(SUM_EVEN, n) + engine.derived(SUM_ODD, n) == S(W), "SUM_EVEN + SUM_ODD = W");
  bool monotone = true;
  for (std::size_t k = 1; k < m.coeffs().size(); ++k) monotone = monotone && m.coeffs()[k] <= m.coeffs()[k - 1];
  expect(monotone, "EDP coefficients nonincreasing");
  const IntPolynomial dg = g.derivative();
  expect((2 * dg.eval_at_one() + dg.derivative().eval_at_one()) % 2 == 0, "hyper-Wiener integrality");
  return bad;
}

SelfTestReport run_selftest(const SelfTestOptions& options, PrimeTable& primes) {
  SelfTestReport report;
  StatsEngine engine(primes);
  auto fail = [&](std::string message) {
    if (report.failures.size() < options.max_failures) report.failures.push_back(std::move(message));
  };

  for (MatulaNumber n = 1; n <= options.max_n; ++n) {
    const oracle::TreeAnalysis analysis = oracle::analyze(decode(n, primes));
    for (const auto& info : all_stats()) {
      for (const auto& args : oracle::check_arguments(info.name, analysis.size())) {
        ++report.oracle_checks;
        const StatValue recursive = engine.compute(info.name, n, args);
        const StatValue definitional = oracle::oracle_stat(info.name, analysis, args);
        if (!oracle::values_agree(recursive, definitional)) {
          fail(std::string(info.symbol) + "(" + std::to_string(n) + "): recursion " + to_string(recursive) +
               ", oracle " + to_string(definitional));
        }
      }
    }

    for (const auto& what : identity_violations(engine, n)) fail("identity " + what + " fails at n = " + std::to_string(n));
    ++report.identity_checks;

    if (n > 3 && !primes.is_prime(n)) {
      std::string detail;
      ++report.split_checks;
      if (!oracle::random_split_check(n, options.seed + n, &detail, primes)) fail("split check: " + detail);
    }
  }
  return report;
}

}  // namespace matula
