#include "tensalg/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "tensalg/checks.hpp"
#include "tensalg/error.hpp"
#include "tensalg/expr.hpp"
#include "tensalg/products.hpp"
#include "tensalg/space.hpp"

namespace tensalg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int report_error(const Error& e, std::ostream& err) {
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err << "parse error at line " << p->line() << ", column " << p->column() << ": " << e.what()
        << '\n';
  } else {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculator for tensor algebras with a Laplace pairing", "tensalg"};
  app.require_subcommand(1);

  std::string space_path;
  std::string expr_text;
  std::string circle_mode = "sym";
  auto* eval = app.add_subcommand("eval", "Evaluate an expression and print its canonical form");
  eval->add_option("--space", space_path, "Space file")->required();
  eval->add_option("--mode", circle_mode, "Meaning of the `o` operator")
      ->check(CLI::IsMember({"sym", "asym"}));
  eval->add_option("expr", expr_text, "Expression")->required();

  CheckOptions check_options;
  bool timing = false;
  std::vector<std::string> only;
  auto* check = app.add_subcommand("check", "Run the randomized law suites");
  check->add_option("--space", space_path, "Space file")->required();
  check->add_option("--seed", check_options.seed, "Master seed");
  check->add_option("--max-grade", check_options.max_grade, "Largest random grade");
  check->add_option("--trials", check_options.trials, "Trials per suite");
  check->add_option("--suite", only, "Run only the named suites");
  check->add_flag("--timing", timing, "Print wall time per suite");

  std::string phi_mode;
  std::size_t phi_grade = 0;
  auto* phi = app.add_subcommand("phi-matrix", "Print the matrix of phi on a truncated basis");
  phi->add_option("--space", space_path, "Space file")->required();
  phi->add_option("--mode", phi_mode, "tensor, sym or asym")
      ->required()
      ->check(CLI::IsMember({"tensor", "sym", "asym"}));
  phi->add_option("--max-grade", phi_grade, "Largest basis grade")->required();

  std::vector<const char*> argv{"tensalg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const SpaceSpec spec = load_space(space_path);
    if (eval->parsed()) {
      EvalOptions options;
      options.circle = circle_mode == "asym" ? CircleMode::kAntisymmetric : CircleMode::kSymmetric;
      out << evaluate_text(expr_text, spec, options) << '\n';
      return kExitOk;
    }
    if (check->parsed()) {
      CheckReport report;
      if (only.empty()) {
        report = run_checks(spec, check_options);
      } else if (check_options.trials > 0) {
        for (const auto& name : only) report.suites.push_back(run_suite(name, spec, check_options));
      }
      out << format_report(report, timing);
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
    const PhiMatrix m = phi_matrix(spec, parse_phi_mode(phi_mode), phi_grade);
    out << format_phi_matrix(m);
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

}  // namespace tensalg
