#include "quartic_pd/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

namespace qpd {

namespace {

using nlohmann::ordered_json;

namespace stages {
constexpr const char* kDiagonal = "diagonal";
constexpr const char* kPrefilter = "prefilter";
constexpr const char* kFastPath = "fast-path";
constexpr const char* kAnalyticBinary = "analytic-binary";
constexpr const char* kPrincipal = "principal-subtensors";
constexpr const char* kCyclicFamily = "cyclic-family";
constexpr const char* kOracle = "oracle";
}  // namespace stages

Verdict undetermined(std::string rule) {
  Verdict v;
  v.rule = std::move(rule);
  return v;
}

bool decisive(const Verdict& v, Question q) {
  switch (v.kind) {
    case Definiteness::PositiveDefinite:
    case Definiteness::PositiveSemidefiniteNotDefinite:
    case Definiteness::Indefinite:
      return true;
    case Definiteness::PositiveSemidefinite:
      return q == Question::PositiveSemidefinite;
    case Definiteness::Undetermined:
      return false;
  }
  return false;
}

Verdict diagonal_stage(const SymmetricTensor4& t) {
  Verdict v;
  const Rational& a = t.at({0, 0, 0, 0});
  v.rule = "diagonal-sign";
  const int s = sgn(a);
  if (s > 0) {
    v.kind = Definiteness::PositiveDefinite;
  } else {
    v.kind = s == 0 ? Definiteness::PositiveSemidefiniteNotDefinite : Definiteness::Indefinite;
    v.witness = RationalVector{Rational(1)};
  }
  return v;
}

Verdict prefilter_stage(const BinaryQuartic& q) {
  const PrefilterResult pre = prefilter_zero_diagonal(q);
  if (pre.pass) return undetermined(pre.residual ? "prefilter-pass-residual" : "prefilter-pass");
  Verdict v;
  v.kind = Definiteness::Indefinite;
  v.rule = sgn(q.a0) < 0 || sgn(q.a4) < 0 ? rules::kBinaryNegativeDiagonal : rules::kBinaryZeroDiagonalNecessary;
  v.witness = pre.witness;
  return v;
}

Verdict fast_path_stage(const BinaryQuartic& q) {
  Verdict v = check_normalized_pm1(q).verdict;
  if (!v.witness && v.kind != Definiteness::PositiveDefinite) {
    const Verdict full = classify_binary(q);
    if (full.kind == v.kind) v.witness = full.witness;
  }
  return v;
}

BinaryQuartic principal_binary(const SymmetricTensor4& t, std::uint8_t i, std::uint8_t j) {
  return {t.at({i, i, i, i}), t.at({i, i, i, j}), t.at({i, i, j, j}), t.at({i, j, j, j}),
          t.at({j, j, j, j})};
}

Verdict principal_stage(const SymmetricTensor4& t, const OracleConfig& cfg) {
  const int n = t.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto ui = static_cast<std::uint8_t>(i);
      const auto uj = static_cast<std::uint8_t>(j);
      const BinaryQuartic q = principal_binary(t, ui, uj);
      Verdict sub = classify_binary(q);
      if (sub.kind != Definiteness::Indefinite) continue;
      if (!sub.witness) {
        // The criterion proves indefiniteness without a point; search for one.
        const Verdict numeric = classify_numeric(q.to_tensor(), cfg);
        if (numeric.kind == Definiteness::Indefinite) sub.witness = numeric.witness;
      }
      Verdict v = sub;
      v.rule = "principal-" + std::to_string(i + 1) + std::to_string(j + 1) + ":" + sub.rule;
      if (sub.witness) {
        RationalVector w(static_cast<std::size_t>(n), Rational(0));
        w[static_cast<std::size_t>(i)] = (*sub.witness)[0];
        w[static_cast<std::size_t>(j)] = (*sub.witness)[1];
        v.witness = std::move(w);
      }
      return v;
    }
  }
  return undetermined("principal-subtensors-pass");
}

Verdict cyclic_stage(const ParsedInput& input, bool rescale) {
  if (input.cyclic) {
    CyclicTernary ct = *input.cyclic;
    if (rescale && sgn(ct.a) > 0) ct = ct.rescaled();
    try {
      return classify_cyclic(ct);
    } catch (const std::invalid_argument&) {
      return undetermined(rules::kCyclicNotCovered);
    }
  }
  try {
    return classify_relaxed(*input.relaxed);
  } catch (const std::invalid_argument&) {
    return undetermined(rules::kRelaxedNotCovered);
  }
}

Verdict oracle_stage(const SymmetricTensor4& t, const OracleConfig& cfg) {
  if (t.dim() > 3) return undetermined("oracle-unsupported-dimension");
  return classify_numeric(t, cfg);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 5e-7 ? 0.0 : v);
  return buf;
}

std::string short_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string decimal_point(const RationalVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += short_decimal(x[i].get_d());
  }
  return out + ")";
}

ordered_json rational_list(const RationalVector& x) {
  ordered_json a = ordered_json::array();
  for (const auto& v : x) a.push_back(to_string(v));
  return a;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["verdict"] = std::string(to_string(v.kind));
  j["rule"] = v.rule;
  j["witness"] = v.witness ? rational_list(*v.witness) : ordered_json();
  if (v.margin) j["margin"] = *v.margin;
  return j;
}

}  // namespace

RunReport run_check(const ParsedInput& input, const CheckOptions& opts) {
  opts.oracle.validate();
  const SymmetricTensor4& t = input.tensor;
  RunReport report;
  report.digest = digest(t);
  report.input_kind = std::string(to_string(input.kind));
  report.max_asymmetry = input.max_asymmetry;

  std::vector<std::pair<const char*, std::function<Verdict()>>> plan;
  if (!opts.oracle_only) {
    const int n = t.dim();
    if (n == 1) {
      plan.emplace_back(stages::kDiagonal, [&] { return diagonal_stage(t); });
    } else if (n == 2) {
      const BinaryQuartic q = input.binary ? *input.binary : BinaryQuartic::from_tensor(t);
      plan.emplace_back(stages::kPrefilter, [q] { return prefilter_stage(q); });
      if (in_normalized_domain(q)) {
        plan.emplace_back(stages::kFastPath, [q] { return fast_path_stage(q); });
      }
      plan.emplace_back(stages::kAnalyticBinary, [q] { return classify_binary(q); });
    } else {
      plan.emplace_back(stages::kPrincipal, [&] { return principal_stage(t, opts.oracle); });
      if (n == 3 && (input.cyclic || input.relaxed)) {
        plan.emplace_back(stages::kCyclicFamily, [&] { return cyclic_stage(input, opts.rescale); });
      }
    }
  }
  if (!opts.analytic_only) {
    plan.emplace_back(stages::kOracle, [&] { return oracle_stage(t, opts.oracle); });
  }

  for (auto& [name, run] : plan) {
    const auto start = std::chrono::steady_clock::now();
    StageResult stage{name, run(), 0.0};
    stage.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (stage.stage == stages::kOracle && stage.verdict.margin) report.min_value = stage.verdict.margin;
    report.trace.push_back(std::move(stage));
    if (decisive(report.trace.back().verdict, opts.question)) break;
  }

  if (report.trace.empty()) {
    report.final_verdict = undetermined("no-stage-run");
    return report;
  }
  const auto pick = [&](auto pred) {
    return std::find_if(report.trace.begin(), report.trace.end(),
                        [&](const StageResult& s) { return pred(s.verdict); });
  };
  auto chosen = pick([&](const Verdict& v) { return decisive(v, opts.question); });
  if (chosen == report.trace.end()) chosen = pick([](const Verdict& v) { return v.decided(); });
  if (chosen == report.trace.end()) chosen = report.trace.end() - 1;
  report.final_verdict = chosen->verdict;
  return report;
}

int exit_code(const Verdict& v) {
  switch (v.kind) {
    case Definiteness::PositiveDefinite: return 0;
    case Definiteness::PositiveSemidefiniteNotDefinite:
    case Definiteness::PositiveSemidefinite: return 1;
    case Definiteness::Indefinite: return 2;
    case Definiteness::Undetermined: return 3;
  }
  return 3;
}

MinimizeReport run_minimize(const ParsedInput& input, const OracleConfig& cfg) {
  MinimizeReport r;
  r.digest = digest(input.tensor);
  r.minimum = sphere_minimize(input.tensor, cfg);
  r.zeros = zero_set_probe(input.tensor, cfg);
  return r;
}

CatalogRun run_inequalities(const std::vector<WeightedInequality>& entries, const OracleConfig& cfg) {
  CatalogRun run;
  run.reports.resize(entries.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      run.reports[i] = verify(entries[i], cfg);
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t count = std::min<std::size_t>(hw, entries.size());
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < count; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& r : run.reports) run.all_as_expected = run.all_as_expected && r.as_expected;
  return run;
}

std::string format_point(const FloatVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += fixed6(x[i]);
  }
  return out + ")";
}

std::string format_point(const RationalVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += to_string(x[i]);
  }
  return out + ")";
}

std::string to_json(const RunReport& r, bool timings) {
  ordered_json j;
  j["schema"] = 1;
  j["input"] = {{"kind", r.input_kind},
                {"digest", r.digest},
                {"max_asymmetry", to_string(r.max_asymmetry)}};
  ordered_json trace = ordered_json::array();
  for (const auto& s : r.trace) {
    ordered_json entry;
    entry["stage"] = s.stage;
    entry.update(verdict_json(s.verdict));
    trace.push_back(std::move(entry));
  }
  j["trace"] = std::move(trace);
  j["verdict"] = std::string(to_string(r.final_verdict.kind));
  j["rule"] = r.final_verdict.rule;
  j["witness"] = r.final_verdict.witness ? rational_list(*r.final_verdict.witness)
                                         : ordered_json::array();
  j["min_value"] = r.min_value ? ordered_json(*r.min_value) : ordered_json();
  j["exit_code"] = exit_code(r.final_verdict);
  if (timings) {
    ordered_json t;
    for (const auto& s : r.trace) t[s.stage] = s.elapsed_ms;
    j["timings"] = std::move(t);
  }
  return j.dump(2);
}

std::string to_json(const MinimizeReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["input"] = {{"digest", r.digest}};
  j["min_value"] = r.minimum.min_value;
  j["minimizer"] = r.minimum.minimizer;
  j["classification"] = std::string(to_string(r.minimum.classification));
  j["iterations"] = r.minimum.iterations_used;
  j["zero_set"] = {{"degenerate", r.zeros.degenerate}, {"points", r.zeros.points}};
  return j.dump(2);
}

std::string to_json(const CatalogRun& r) {
  ordered_json j;
  j["schema"] = 1;
  ordered_json reports = ordered_json::array();
  for (const auto& rep : r.reports) {
    ordered_json e;
    e["label"] = rep.label;
    e["status"] = rep.status;
    e["min_value"] = rep.sphere_min;
    e["min_point"] = rep.min_point;
    e["equality_points"] = rep.equality_points;
    e["witness"] = rep.witness ? rational_list(*rep.witness) : ordered_json();
    e["exact_value"] = rep.exact_value ? ordered_json(to_string(*rep.exact_value)) : ordered_json();
    reports.push_back(std::move(e));
  }
  j["reports"] = std::move(reports);
  j["all_as_expected"] = r.all_as_expected;
  return j.dump(2);
}

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << "input    " << r.input_kind << " " << r.digest;
  if (sgn(r.max_asymmetry) != 0) out << " (symmetrized, max asymmetry " << to_string(r.max_asymmetry) << ")";
  out << "\n";
  for (const auto& s : r.trace) {
    out << "stage    " << s.stage << ": " << to_string(s.verdict.kind) << " [" << s.verdict.rule << "]";
    if (s.verdict.margin) out << " min " << short_decimal(*s.verdict.margin);
    out << "\n";
  }
  out << "verdict  " << to_string(r.final_verdict.kind) << " [" << r.final_verdict.rule << "]\n";
  if (r.final_verdict.witness) out << "witness  " << format_point(*r.final_verdict.witness) << "\n";
  if (r.min_value) out << "min      " << short_decimal(*r.min_value) << "\n";
  return out.str();
}

std::string to_text(const MinimizeReport& r) {
  std::ostringstream out;
  out << "min " << fixed6(r.minimum.min_value) << " at " << format_point(r.minimum.minimizer) << "\n";
  out << "classification " << to_string(r.minimum.classification) << "\n";
  if (r.zeros.degenerate) {
    out << "zero set: degenerate (form vanishes on every sample)\n";
  } else if (r.zeros.points.empty()) {
    out << "zero set: empty\n";
  } else {
    out << "zero set: " << r.zeros.points.size() << " point(s)\n";
    for (const auto& p : r.zeros.points) out << "  " << format_point(p) << "\n";
  }
  return out.str();
}

std::string to_text(const CatalogRun& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %-16s %14s  %s\n", "label", "status", "min", "witness");
  out << line;
  for (const auto& rep : r.reports) {
    std::snprintf(line, sizeof line, "%-16s %-16s %14.6e  ", rep.label.c_str(), rep.status.c_str(),
                  rep.sphere_min);
    out << line;
    if (rep.expected_fail) {
      out << (rep.witness ? decimal_point(*rep.witness) : format_point(rep.min_point));
    } else if (!rep.equality_points.empty()) {
      for (std::size_t i = 0; i < rep.equality_points.size(); ++i) {
        if (i) out << " ";
        out << format_point(rep.equality_points[i]);
      }
    } else {
      out << "-";
    }
    if (rep.exact_value) out << "  exact " << to_string(*rep.exact_value);
    out << "\n";
  }
  out << (r.all_as_expected ? "all entries as expected\n" : "some entries NOT as expected\n");
  return out.str();
}

}  // namespace qpd
