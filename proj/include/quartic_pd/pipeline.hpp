#pragma once

#include "quartic_pd/inequalities.hpp"
#include "quartic_pd/input.hpp"
#include "quartic_pd/oracle.hpp"
#include "quartic_pd/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpd {

enum class Question { PositiveDefinite, PositiveSemidefinite };

struct CheckOptions {
  Question question = Question::PositiveDefinite;
  bool oracle_only = false;
  bool analytic_only = false;
  /// Divide a cyclic input by a > 0 before applying the family rules.
  bool rescale = false;
  OracleConfig oracle;
};

struct StageResult {
  std::string stage;
  Verdict verdict;
  double elapsed_ms = 0.0;
};

struct RunReport {
  std::string digest;
  std::string input_kind;
  /// Largest |raw - symmetrized| entry for raw inputs, zero otherwise.
  Rational max_asymmetry;
  std::vector<StageResult> trace;
  Verdict final_verdict;
  /// Sphere minimum, when the oracle stage ran.
  std::optional<double> min_value;
};

/// Runs the stages in fixed order and stops at the first decisive one. A stage
/// is decisive when it settles the question: PD, PSD-not-PD and Indefinite
/// always do; plain PSD only does for the PSD question.
RunReport run_check(const ParsedInput& input, const CheckOptions& opts = {});

/// 0 PD, 1 PSD or PSD-not-PD, 2 Indefinite, 3 Undetermined.
int exit_code(const Verdict& v);

/// Exit status reserved for malformed input.
inline constexpr int kInputErrorExit = 64;

struct MinimizeReport {
  std::string digest;
  OracleResult minimum;
  ZeroSet zeros;
};

MinimizeReport run_minimize(const ParsedInput& input, const OracleConfig& cfg = {});

struct CatalogRun {
  std::vector<InequalityReport> reports;
  bool all_as_expected = true;
};

/// Verifies `entries` concurrently; reports keep the input order.
CatalogRun run_inequalities(const std::vector<WeightedInequality>& entries,
                            const OracleConfig& cfg = {});

/// Machine-readable output (schema 1). Timings go under "timings" and are
/// omitted when `timings` is false.
std::string to_json(const RunReport& r, bool timings = true);
std::string to_json(const MinimizeReport& r);
std::string to_json(const CatalogRun& r);

std::string to_text(const RunReport& r);
std::string to_text(const MinimizeReport& r);
std::string to_text(const CatalogRun& r);

/// Fixed six-decimal rendering used in text output, e.g. "(0.577350, ...)".
std::string format_point(const FloatVector& x);
std::string format_point(const RationalVector& x);

}  // namespace qpd
