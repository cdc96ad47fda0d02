#include "quartic_pd/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct OracleFlags {
  int grid = 0;
  std::uint64_t seed = 0;
  double margin = 1e-8;

  void add(CLI::App* cmd) {
    cmd->add_option("--grid", grid, "Sample count on the sphere (0 = default)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", seed, "Seed for the sample jitter");
    cmd->add_option("--margin", margin, "Half-width of the boundary band")->check(CLI::PositiveNumber);
  }

  qpd::OracleConfig config() const {
    qpd::OracleConfig cfg;
    cfg.grid_points = grid;
    cfg.seed = seed;
    cfg.classify_margin = margin;
    return cfg;
  }
};

struct InputFlags {
  std::string source;
  std::string binary, cyclic, relaxed;

  void add(CLI::App* cmd) {
    cmd->add_option("input", source,
                    "Tensor file, '-' for stdin, or inline shorthand such as \"cyclic 1 -1 1 1 -1/6\"");
    auto* b = cmd->add_option("--binary", binary, "Binary shorthand \"t1111 t1112 t1122 t1222 t2222\"");
    auto* c = cmd->add_option("--cyclic", cyclic, "Cyclic shorthand \"a b c d e\"");
    auto* r = cmd->add_option("--relaxed", relaxed, "Relaxed shorthand \"a b c d e123 e223 e233\"");
    b->excludes(c, r);
    c->excludes(r);
  }

  qpd::ParsedInput load() const {
    const int given = !source.empty() + !binary.empty() + !cyclic.empty() + !relaxed.empty();
    if (given != 1) throw qpd::InputError("input", "give exactly one of a path, inline text, --binary, --cyclic, --relaxed");
    if (!binary.empty()) return qpd::parse_input("binary " + binary);
    if (!cyclic.empty()) return qpd::parse_input("cyclic " + cyclic);
    if (!relaxed.empty()) return qpd::parse_input("relaxed " + relaxed);
    if (source == "-" || std::filesystem::is_regular_file(source)) return qpd::load_input(source);
    for (const char* kind : {"binary ", "cyclic ", "relaxed ", "{"}) {
      if (source.rfind(kind, 0) == 0) return qpd::parse_input(source);
    }
    throw qpd::InputError("input", "'" + source + "' is neither a file nor inline shorthand");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive definiteness of 4th-order symmetric tensors"};
  app.require_subcommand(1);

  qpd::CheckOptions check_opts;
  InputFlags check_input;
  OracleFlags check_oracle;
  bool psd = false, json = false, no_timings = false;
  auto* check = app.add_subcommand("check", "Classify a tensor (exit 0 PD, 1 PSD, 2 indefinite, 3 undetermined)");
  check_input.add(check);
  check_oracle.add(check);
  check->add_flag("--psd", psd, "Ask for PSD instead of PD");
  auto* oracle_only = check->add_flag("--oracle-only", check_opts.oracle_only, "Skip the analytic stages");
  auto* analytic_only = check->add_flag("--analytic-only", check_opts.analytic_only, "Skip the numeric oracle");
  oracle_only->excludes(analytic_only);
  check->add_flag("--rescale", check_opts.rescale, "Divide a cyclic tensor by t1111 > 0 first");
  check->add_flag("--json", json, "Machine-readable report");
  check->add_flag("--no-timings", no_timings, "Omit stage timings from the JSON report");

  InputFlags min_input;
  OracleFlags min_oracle;
  bool min_json = false;
  auto* minimize = app.add_subcommand("minimize", "Sphere minimum, minimizer and zero-set probe");
  min_input.add(minimize);
  min_oracle.add(minimize);
  minimize->add_flag("--json", min_json, "Machine-readable report");

  OracleFlags ineq_oracle;
  std::vector<std::string> only;
  bool with_exchanged = false, ineq_json = false;
  auto* inequalities = app.add_subcommand("inequalities", "Verify the builtin inequality catalog");
  ineq_oracle.add(inequalities);
  inequalities->add_option("--only", only, "Restrict to these labels (e.g. 19u, 19-14-14, 15-16-14-x)");
  inequalities->add_flag("--exchanged", with_exchanged, "Also verify the exchanged variants");
  inequalities->add_flag("--json", ineq_json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qpd::kInputErrorExit;
  }

  try {
    if (check->parsed()) {
      check_opts.question = psd ? qpd::Question::PositiveSemidefinite : qpd::Question::PositiveDefinite;
      check_opts.oracle = check_oracle.config();
      const qpd::RunReport report = qpd::run_check(check_input.load(), check_opts);
      std::cout << (json ? qpd::to_json(report, !no_timings) + "\n" : qpd::to_text(report));
      return qpd::exit_code(report.final_verdict);
    }
    if (minimize->parsed()) {
      const qpd::MinimizeReport report = qpd::run_minimize(min_input.load(), min_oracle.config());
      std::cout << (min_json ? qpd::to_json(report) + "\n" : qpd::to_text(report));
      return 0;
    }
    const auto catalog = qpd::catalog_with_exchanged();
    std::vector<qpd::WeightedInequality> entries;
    if (only.empty()) {
      entries = with_exchanged ? catalog : qpd::builtin_catalog();
    } else {
      for (const auto& label : only) {
        auto entry = qpd::find_inequality(catalog, label);
        if (!entry) throw qpd::InputError("--only", "unknown label '" + label + "'");
        entries.push_back(*entry);
      }
    }
    const qpd::CatalogRun run = qpd::run_inequalities(entries, ineq_oracle.config());
    std::cout << (ineq_json ? qpd::to_json(run) + "\n" : qpd::to_text(run));
    return run.all_as_expected ? 0 : 1;
  } catch (const qpd::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qpd::kInputErrorExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qpd::kInputErrorExit;
  }
}
