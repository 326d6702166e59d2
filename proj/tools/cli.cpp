#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>

#include "matula/bfile.hpp"
#include "matula/error.hpp"
#include "matula/oracle.hpp"
#include "matula/selftest.hpp"
#include "matula/stat_name.hpp"
#include "matula/stats.hpp"
#include "matula/tree.hpp"

namespace matula::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

StatName stat_or_usage(const std::string& text) {
  auto name = parse_stat_name(text);
  if (!name) throw UsageError("unknown statistic '" + text + "' (see `matula names`)");
  return *name;
}

StatArgs make_args(const std::optional<std::string>& alpha, const std::optional<long long>& k) {
  StatArgs args;
  if (alpha) args.alpha = Exponent::parse(*alpha);
  args.k = k;
  return args;
}

BigInt integer_value(const StatValue& value, StatName name) {
  if (const BigInt* v = std::get_if<BigInt>(&value)) return *v;
  throw InvalidInput(std::string(stat_info(name).symbol) + " is not integer-valued for these arguments");
}

void print_names(std::ostream& out) {
  for (const auto& info : all_stats()) {
    out << info.symbol << '\t' << (info.oeis.empty() ? "-" : info.oeis) << '\t' << info.description << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matula numbers: rooted trees, their statistics and OEIS b-files", "matula"};
  app.require_subcommand(1);

  std::string n_text;
  std::string format = "paren";
  auto* decode_cmd = app.add_subcommand("decode", "print the rooted tree with Matula number n");
  decode_cmd->add_option("n", n_text, "Matula number")->required();
  decode_cmd->add_option("--format", format, "paren, json or dot")
      ->check(CLI::IsMember({"paren", "json", "dot"}));

  std::string paren;
  auto* encode_cmd = app.add_subcommand("encode", "print the Matula number of a paren-encoded tree");
  encode_cmd->add_option("tree", paren, "tree such as (()())")->required();

  std::string stat_text;
  std::optional<std::string> alpha;
  std::optional<long long> k;
  auto* stat_cmd = app.add_subcommand("stat", "compute one statistic S(n)");
  stat_cmd->add_option("name", stat_text, "statistic (see `matula names`)")->required();
  stat_cmd->add_option("n", n_text, "Matula number")->required();
  stat_cmd->add_option("--alpha", alpha, "exponent for A_ALPHA / R_ALPHA, e.g. 2 or -1/2");
  stat_cmd->add_option("--k", k, "distance for POLARITY, level for LEVEL_COUNT");

  std::string lo_text;
  std::string hi_text;
  bool bfile_mode = false;
  auto* table_cmd = app.add_subcommand("table", "tabulate S(n) for lo <= n <= hi");
  table_cmd->add_option("name", stat_text)->required();
  table_cmd->add_option("lo", lo_text)->required();
  table_cmd->add_option("hi", hi_text)->required();
  table_cmd->add_flag("--bfile", bfile_mode, "emit exactly \"n value\" lines (integer statistics only)");
  table_cmd->add_option("--alpha", alpha);
  table_cmd->add_option("--k", k);

  std::string path;
  std::optional<std::size_t> limit;
  auto* verify_cmd = app.add_subcommand("verify", "compare a statistic against an OEIS b-file");
  verify_cmd->add_option("name", stat_text)->required();
  verify_cmd->add_option("bfile", path, "path to the b-file")->required();
  verify_cmd->add_option("--limit", limit, "check only the first K entries");
  verify_cmd->add_option("--alpha", alpha);
  verify_cmd->add_option("--k", k);

  MatulaNumber max_n = 5000;
  std::uint64_t seed = 1;
  auto* selftest_cmd = app.add_subcommand("selftest", "check the recursions against the explicit-tree oracle");
  selftest_cmd->add_option("--max-n", max_n, "check every n in 1..N");
  selftest_cmd->add_option("--seed", seed, "seed for the random-split check");

  auto* names_cmd = app.add_subcommand("names", "list statistic names with their OEIS numbers");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*names_cmd) {
      print_names(out);
    } else if (*decode_cmd) {
      const RootedTree tree = decode(parse_matula_number(n_text));
      if (format == "json") {
        out << to_json(tree) << '\n';
      } else if (format == "dot") {
        out << to_dot(tree);
      } else {
        out << to_canonical_string(tree) << '\n';
      }
    } else if (*encode_cmd) {
      out << encode(parse_canonical_string(paren)) << '\n';
    } else if (*stat_cmd) {
      const StatName name = stat_or_usage(stat_text);
      const MatulaNumber n = parse_matula_number(n_text);
      StatsEngine engine;
      out << to_string(engine.compute(name, n, make_args(alpha, k))) << '\n';
      if (is_convention_value(name, n)) {
        err << "note: " << stat_info(name).symbol << "(" << n << ") is a convention, the tree has no leaves\n";
      }
    } else if (*table_cmd) {
      const StatName name = stat_or_usage(stat_text);
      if (bfile_mode && stat_info(name).kind == StatKind::Polynomial) {
        throw UsageError("--bfile needs an integer-valued statistic");
      }
      const MatulaNumber lo = parse_matula_number(lo_text);
      const MatulaNumber hi = parse_matula_number(hi_text);
      if (lo == 0) throw InvalidInput("Matula numbers start at 1");
      if (lo > hi) throw UsageError("empty range: lo > hi");
      const StatArgs stat_args = make_args(alpha, k);
      StatsEngine engine;
      if (!bfile_mode) {
        out << "# " << stat_info(name).symbol << " (" << stat_info(name).description << ") for n = " << lo
            << ".." << hi << '\n';
      }
      for (MatulaNumber n = lo;; ++n) {
        const StatValue value = engine.compute(name, n, stat_args);
        out << n << ' ' << (bfile_mode ? integer_value(value, name).str() : to_string(value)) << '\n';
        if (n == hi) break;
      }
    } else if (*verify_cmd) {
      const StatName name = stat_or_usage(stat_text);
      const StatArgs stat_args = make_args(alpha, k);
      const BFile file = BFile::read(path);
      StatsEngine engine;
      const BFileVerification result = verify_bfile(
          file,
          [&](std::int64_t index) {
            if (index < 1) throw InvalidInput("b-file index " + std::to_string(index) + " is not a Matula number");
            return integer_value(engine.compute(name, static_cast<MatulaNumber>(index), stat_args), name);
          },
          limit);
      if (!result.ok()) {
        const auto& m = *result.first_mismatch;
        out << "MISMATCH " << stat_info(name).symbol << " at n = " << m.index << ": b-file has " << m.expected
            << ", computed " << m.actual << '\n';
        return kMismatch;
      }
      out << "OK " << stat_info(name).symbol << ": " << result.checked << " terms match";
      if (result.checked > 0) {
        out << " (n = " << file.entries.front().index << ".." << file.entries[result.checked - 1].index << ")";
      }
      out << '\n';
    } else if (*selftest_cmd) {
      const SelfTestReport report = run_selftest({max_n, seed});
      out << "oracle checks:   " << report.oracle_checks << '\n'
          << "identity checks: " << report.identity_checks << '\n'
          << "split checks:    " << report.split_checks << '\n';
      for (const auto& f : report.failures) out << "FAIL " << f << '\n';
      out << (report.ok() ? "selftest passed" : "selftest FAILED") << '\n';
      return report.ok() ? kOk : kComputationError;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kOk;
}

}  // namespace matula::cli
