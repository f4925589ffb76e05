#include "cliff/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "cliff/expr.hpp"
#include "cliff/serialize.hpp"
#include "cliff/verifier.hpp"

namespace cliff {

namespace {

constexpr std::size_t kShownCounterexamples = 5;

int run_simplify(const std::string &input, RenderFormat fmt, std::ostream &out,
                 std::ostream &err) {
  try {
    const auto ast = parse(input);
    out << render(evaluate(*ast), fmt) << '\n';
    return kExitOk;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n'
        << "  " << input << '\n'
        << "  " << std::string(e.offset(), ' ') << "^\n";
    return kExitUsage;
  }
}

void print_report(const IdentityReport &report, std::ostream &out) {
  out << (report.passed() ? "PASS " : "FAIL ") << to_string(report.identity) << " ["
      << to_string(report.representation) << "] " << report.cases_checked << " cases";
  if (!report.passed()) {
    out << ", " << report.counterexamples.size() << " counterexamples";
  }
  out << '\n';
  const std::size_t shown = std::min(report.counterexamples.size(), kShownCounterexamples);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto &c = report.counterexamples[i];
    out << "    " << c.label << ": engine " << to_string(c.engine) << ", oracle "
        << to_string(c.oracle) << '\n';
  }
}

int run_verify(const std::string &identity, RepresentationKind kind, const std::string &json_path,
               std::ostream &out, std::ostream &err) {
  std::vector<IdentityId> ids;
  if (identity.empty()) {
    for (const auto &entry : identity_catalog()) {
      ids.push_back(entry.id);
    }
  } else {
    const auto id = parse_identity(identity);
    if (!id) {
      err << "error: unknown identity '" << identity << "'; known identities:\n";
      for (const auto &entry : identity_catalog()) {
        err << "  " << entry.name << '\n';
      }
      return kExitUsage;
    }
    ids.push_back(*id);
  }

  const auto reports = verify_all(Representation::get(kind), ids);
  std::size_t passed = 0;
  std::size_t cases = 0;
  for (const auto &r : reports) {
    print_report(r, out);
    passed += r.passed() ? 1 : 0;
    cases += r.cases_checked;
  }
  out << passed << "/" << reports.size() << " identities passed, " << cases << " cases\n";

  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file) {
      err << "error: cannot write " << json_path << '\n';
      return kExitUsage;
    }
    file << to_json(reports).dump(2) << '\n';
  }
  return passed == reports.size() ? kExitOk : kExitVerifyFailed;
}

int run_table(std::optional<int> left, std::optional<int> right, RenderFormat fmt,
              std::ostream &out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (auto a : Blade::all()) {
    if (left && a.grade() != *left) {
      continue;
    }
    for (auto b : Blade::all()) {
      if (right && b.grade() != *right) {
        continue;
      }
      const Multivector &p = blade_product(a, b);
      switch (fmt) {
      case RenderFormat::plain:
        out << to_string(a) << " * " << to_string(b) << " = " << render(p, fmt) << '\n';
        break;
      case RenderFormat::latex:
        out << render(a, fmt) << render(b, fmt) << " = " << render(p, fmt) << '\n';
        break;
      case RenderFormat::json:
        rows.push_back({{"left", to_string(a)}, {"right", to_string(b)}, {"product", to_json(p)}});
        break;
      }
    }
  }
  if (fmt == RenderFormat::json) {
    out << rows.dump(2) << '\n';
  }
  return kExitOk;
}

const std::vector<std::string> kFormats{"plain", "latex", "json"};
const std::vector<std::string> kReps{"standard", "chiral"};

} // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact products of Dirac-algebra generators in four dimensions"};
  app.require_subcommand(1);

  auto *simplify = app.add_subcommand("simplify", "Simplify a gamma-matrix expression");
  std::string expression;
  std::string simplify_format = "plain";
  simplify->add_option("expr", expression, "Expression, e.g. \"g(0)*g(0,1)\"")->required();
  simplify->add_option("--format", simplify_format, "plain, latex or json")
      ->check(CLI::IsMember(kFormats));

  auto *verify = app.add_subcommand("verify", "Exhaustively check the product identities");
  std::string identity;
  bool all = false;
  std::string rep = "standard";
  std::string json_path;
  auto *identity_opt = verify->add_option("--identity", identity, "Check a single identity");
  verify->add_flag("--all", all, "Check every identity (default)")->excludes(identity_opt);
  verify->add_option("--rep", rep, "standard or chiral")
      ->check(CLI::IsMember(kReps));
  verify->add_option("--json", json_path, "Write the reports as JSON to this path");

  auto *table = app.add_subcommand("table", "Print the product table of the basis blades");
  std::optional<int> left_grade;
  std::optional<int> right_grade;
  std::string table_format = "plain";
  table->add_option("--left-grade", left_grade, "Grade of the left factor")
      ->check(CLI::Range(0, 4));
  table->add_option("--right-grade", right_grade, "Grade of the right factor")
      ->check(CLI::Range(0, 4));
  table->add_option("--format", table_format, "plain, latex or json")
      ->check(CLI::IsMember(kFormats));

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (simplify->parsed()) {
    return run_simplify(expression, *parse_format(simplify_format), out, err);
  }
  if (verify->parsed()) {
    return run_verify(identity, *parse_representation(rep), json_path, out, err);
  }
  return run_table(left_grade, right_grade, *parse_format(table_format), out);
}

} // namespace cliff
