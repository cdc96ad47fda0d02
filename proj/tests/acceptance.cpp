// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "quartic_pd/binary.hpp"
#include "quartic_pd/cyclic.hpp"
#include "quartic_pd/inequalities.hpp"
#include "quartic_pd/oracle.hpp"
#include "random_tensors.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using qpd::BinaryQuartic;
using qpd::CyclicTernary;
using qpd::Definiteness;
using qpd::Rational;
using qpd::RationalVector;
using ref::q;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool near_antipodal_ones(const std::vector<qpd::FloatVector>& pts, double tol) {
  if (pts.size() != 2) return false;
  const double s = 1.0 / std::sqrt(3.0);
  bool plus = false, minus = false;
  for (const auto& p : pts) {
    double dp = 0.0, dm = 0.0;
    for (double v : p) {
      dp = std::max(dp, std::abs(v - s));
      dm = std::max(dm, std::abs(v + s));
    }
    plus = plus || dp <= tol;
    minus = minus || dm <= tol;
  }
  return plus && minus;
}

Outcome criterion1() {
  const Rational v = qpd::evaluate_form(qpd::embed(CyclicTernary{q(1), q(1), q(1), q(1), q(-7, 12)}),
                                        RationalVector{q(1), q(1), q(-5)});
  return {v == -204, "T(1,1,-5) = " + qpd::to_string(v)};
}

Outcome criterion2() {
  const Rational v = qpd::evaluate_form(qpd::embed(CyclicTernary{q(1), q(-1), q(-1), q(1), q(-7, 12)}),
                                        RationalVector{q(1), q(1), q(1)});
  return {v == -24, "T(1,1,1) = " + qpd::to_string(v)};
}

Outcome criterion3() {
  const auto start = std::chrono::steady_clock::now();
  const auto t = qpd::embed(CyclicTernary{q(1), q(-1), q(1), q(1), q(-7, 12)});
  const auto r = qpd::sphere_minimize(t);
  const auto z = qpd::zero_set_probe(t);
  const double elapsed = seconds_since(start);
  const bool min_ok = std::abs(r.min_value) <= 1e-8;
  const bool zeros_ok = !z.degenerate && near_antipodal_ones(z.points, 1e-4);
  std::ostringstream d;
  d << "min " << r.min_value << ", zero set " << z.points.size() << " point(s)"
    << (zeros_ok ? " at +-(1,1,1)/sqrt3" : " NOT at +-(1,1,1)/sqrt3") << ", " << elapsed << " s";
  return {min_ok && zeros_ok && elapsed < 5.0, d.str()};
}

Outcome criterion4() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240401);
  const long steps = 10000;
  std::uniform_int_distribution<long> ke(1, steps), kd(0, 1000), coin(0, 1);
  const Rational lo = q(-7, 12), width = q(-5, 36) - lo;
  int pd = 0, positive = 0;
  double worst = 1e300;
  for (int i = 0; i < 200; ++i) {
    const Rational e = lo + width * q(ke(rng), steps);
    const Rational d = 1 + q(2 * kd(rng), 1000);
    const Rational b = coin(rng) ? q(1) : q(-1);
    const CyclicTernary p{q(1), b, -b, d, e};
    if (qpd::classify_cyclic(p).kind == Definiteness::PositiveDefinite) ++pd;
    const double m = qpd::sphere_minimize(qpd::embed(p)).min_value;
    worst = std::min(worst, m);
    if (m > 1e-8) ++positive;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << pd << "/200 PD, " << positive << "/200 oracle min > 1e-8 (smallest " << worst << "), " << elapsed << " s";
  return {pd == 200 && positive == 200 && elapsed < 600.0, d.str()};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  int compared = 0, disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    const BinaryQuartic b{ref::random_rational(rng, -2, 2), ref::random_rational(rng, -2, 2),
                          ref::random_rational(rng, -2, 2), ref::random_rational(rng, -2, 2),
                          ref::random_rational(rng, -2, 2)};
    const auto o = qpd::sphere_minimize(b.to_tensor());
    if (std::abs(o.min_value) <= 1e-6) continue;
    ++compared;
    const bool oracle_pd = o.min_value > 0;
    const bool pd = qpd::is_positive_definite(b).holds;
    const bool psd = qpd::is_positive_semidefinite(b).holds;
    const auto v = qpd::classify_binary(b);
    const bool agree = pd == oracle_pd && psd == oracle_pd &&
                       (v.kind == Definiteness::PositiveDefinite) == oracle_pd &&
                       (v.kind == Definiteness::Indefinite) == !oracle_pd;
    if (!agree) ++disagreements;
  }
  std::ostringstream d;
  d << compared << " instances with margin > 1e-6, " << disagreements << " disagreements";
  return {disagreements == 0 && compared > 9000, d.str()};
}

Outcome criterion6() {
  const BinaryQuartic pd_form{q(1), q(-1), q(1), q(1), q(1)};
  const BinaryQuartic edge{q(1), q(1), q(1), q(1), q(1)};
  const auto a = qpd::check_normalized_pm1(pd_form);
  const auto b = qpd::check_normalized_pm1(edge);
  const bool ok_a = a.lhs == 432 && a.rhs == 512 && a.verdict.kind == Definiteness::PositiveDefinite &&
                    qpd::classify_binary(pd_form).kind == Definiteness::PositiveDefinite;
  const bool ok_b = b.lhs == 0 && b.rhs == 0 &&
                    b.verdict.kind == Definiteness::PositiveSemidefiniteNotDefinite &&
                    !qpd::is_positive_definite(edge).holds && qpd::is_positive_semidefinite(edge).holds;
  std::ostringstream d;
  d << "(1,-1,1,1,1): " << qpd::to_string(*a.lhs) << " < " << qpd::to_string(*a.rhs) << " -> "
    << qpd::to_string(a.verdict.kind) << "; (1,1,1,1,1): " << qpd::to_string(*b.lhs)
    << " <= " << qpd::to_string(*b.rhs) << " -> " << qpd::to_string(b.verdict.kind);
  return {ok_a && ok_b, d.str()};
}

Outcome criterion7() {
  const auto catalog = qpd::builtin_catalog();
  std::vector<std::string> bad;
  auto get = [&](const std::string& label) { return *qpd::find_inequality(catalog, label); };
  for (const char* label : {"14u", "15u", "16u", "17u", "18u", "41/3u", "19-17-15", "19-16-15", "15-14-14",
                            "15-16-14", "17-15-18"}) {
    const auto r = qpd::verify(get(label));
    if (!(r.sphere_min > 1e-8 && r.status == "HOLDS")) bad.push_back(label);
  }
  {
    const auto r = qpd::verify(get("19u"));
    if (!(std::abs(r.sphere_min) <= 1e-8 && near_antipodal_ones(r.equality_points, 1e-4))) bad.push_back("19u");
  }
  const RationalVector split{q(-6, 5), q(5), q(1)};
  for (const char* label : {"19-14-14", "18-14-14", "17-14-14", "16-14-14"}) {
    const auto w = get(label);
    if (!(sgn(qpd::exact_spot_check(w, split)) < 0 && qpd::verify(w).status == "FAIL(expected)")) bad.push_back(label);
  }
  {
    const auto w = get("41/3-15-15");
    const RationalVector p{q(-47, 5), q(-2), q(23, 10)};
    if (!(sgn(qpd::exact_spot_check(w, p)) < 0 && qpd::verify(w).status == "FAIL(expected)")) bad.push_back("41/3-15-15");
  }
  // -23.2384 through the tensor and through the direct expansion.
  const Rational via_tensor = qpd::exact_spot_check(get("19-14-14"), split);
  const Rational direct = ref::inequality_poly({q(19), q(14), q(14)}, false, split);
  const bool value_ok = via_tensor == qpd::parse_rational("-23.2384") && direct == via_tensor;
  if (!value_ok) bad.push_back("P(-1.2,5,1)");
  std::ostringstream d;
  d << "P_19-14-14(-1.2,5,1) = " << qpd::to_string(via_tensor) << " = " << via_tensor.get_d();
  if (!bad.empty()) {
    d << "; failing:";
    for (const auto& b : bad) d << " " << b;
  }
  return {bad.empty(), d.str()};
}

long long binomial4(int k) {
  static const long long c[5] = {1, 4, 6, 4, 1};
  return c[k];
}

/// Runs `body` for `cases` trials and counts failures.
int count_failures(int cases, const std::function<bool(int)>& body) {
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    if (!body(i)) ++failures;
  }
  return failures;
}

Outcome criterion8() {
  constexpr int kCases = 1000;
  std::mt19937_64 rng(8);
  std::vector<std::pair<std::string, int>> suites;

  suites.emplace_back("permutation invariance", count_failures(kCases, [&](int i) {
    const int n = 2 + i % 3;
    auto [t, dense] = ref::random_tensor(rng, n);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::pair<qpd::Index4, Rational>> permuted;
    for (const auto& [c, v] : t.entries()) {
      permuted.push_back({{static_cast<std::uint8_t>(p[c[0]]), static_cast<std::uint8_t>(p[c[1]]),
                           static_cast<std::uint8_t>(p[c[2]]), static_cast<std::uint8_t>(p[c[3]])},
                          v});
    }
    const qpd::SymmetricTensor4 pt(n, permuted);
    const RationalVector x = ref::random_vector(rng, n);
    RationalVector px(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) px[p[k]] = x[k];
    qpd::Index4 idx{0, 0, 0, 0};
    for (auto& v : idx) v = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(n));
    qpd::Index4 shuffled = idx;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    return qpd::evaluate_form(pt, px) == qpd::evaluate_form(t, x) && t.at(idx) == t.at(shuffled) &&
           qpd::evaluate_form(t, x) == ref::form(dense, x);
  }));

  suites.emplace_back("degree-4 homogeneity", count_failures(kCases, [&](int i) {
    const int n = 1 + i % 4;
    auto [t, dense] = ref::random_tensor(rng, n);
    RationalVector x = ref::random_vector(rng, n);
    const Rational l = ref::random_rational(rng, -4, 4, 9);
    const Rational before = qpd::evaluate_form(t, x);
    for (auto& v : x) v *= l;
    return qpd::evaluate_form(t, x) == l * l * l * l * before;
  }));

  suites.emplace_back("binomial expansion", count_failures(kCases, [&](int i) {
    const int n = 1 + i % 4;
    auto [t, dense] = ref::random_tensor(rng, n);
    const RationalVector x = ref::random_vector(rng, n), y = ref::random_vector(rng, n);
    RationalVector s(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) s[k] = x[k] + y[k];
    Rational sum = 0;
    for (int k = 0; k <= 4; ++k) sum += Rational(static_cast<long>(binomial4(k))) * qpd::evaluate_mixed(t, x, k, y);
    return qpd::evaluate_form(t, s) == sum;
  }));

  suites.emplace_back("<T, x^(x)4> = Tx^4", count_failures(kCases, [&](int i) {
    const int n = 1 + i % 4;
    auto [t, dense] = ref::random_tensor(rng, n);
    const qpd::RankOneTensor4 r{ref::random_vector(rng, n)};
    return qpd::inner_product(t, r) == qpd::evaluate_form(t, r.generator) &&
           qpd::inner_product(t, r) == ref::form(dense, r.generator);
  }));

  suites.emplace_back("|x^(x)4|_F = |x|^4", count_failures(kCases, [&](int i) {
    const qpd::RankOneTensor4 r{ref::random_vector(rng, 1 + i % 4)};
    Rational sq = 0;
    for (const auto& v : r.generator) sq += v * v;
    return qpd::frobenius_norm_squared(r.to_tensor()) == sq * sq * sq * sq;
  }));

  suites.emplace_back("cyclic rotation invariance", count_failures(kCases, [&](int) {
    const CyclicTernary p{ref::random_rational(rng, -2, 2, 6), ref::random_rational(rng, -2, 2, 6),
                          ref::random_rational(rng, -2, 2, 6), ref::random_rational(rng, -2, 2, 6),
                          ref::random_rational(rng, -2, 2, 6)};
    const auto t = qpd::embed(p);
    const RationalVector x = ref::random_vector(rng, 3);
    return qpd::evaluate_form(t, x) == qpd::evaluate_form(t, RationalVector{x[2], x[0], x[1]});
  }));

  auto random_binary = [&] {
    return BinaryQuartic{ref::random_rational(rng, -2, 2, 4), ref::random_rational(rng, -2, 2, 4),
                         ref::random_rational(rng, -2, 2, 4), ref::random_rational(rng, -2, 2, 4),
                         ref::random_rational(rng, -2, 2, 4)};
  };

  suites.emplace_back("verdict invariance under positive scaling", count_failures(kCases, [&](int i) {
    const BinaryQuartic b = random_binary();
    const Rational c = q(1 + i % 17, 1 + i % 5);
    const bool binary_ok = qpd::classify_binary(b).kind == qpd::classify_binary(b.scaled(c)).kind;
    const CyclicTernary p{q(1), q(-1), q(1), 1 + q(i % 7, 3), q(-7, 12) + q(1 + i % 50, 100)};
    const CyclicTernary scaled{c, -c, c, c * p.d, c * p.e};
    const bool cyclic_ok = qpd::classify_cyclic(p).kind == qpd::classify_cyclic(scaled.rescaled()).kind;
    return binary_ok && cyclic_ok;
  }));

  suites.emplace_back("x1<->x2 swap symmetry", count_failures(kCases, [&](int) {
    const BinaryQuartic b = random_binary();
    return qpd::classify_binary(b).kind == qpd::classify_binary(b.swapped()).kind &&
           qpd::is_positive_definite(b).holds == qpd::is_positive_definite(b.swapped()).holds &&
           qpd::is_positive_semidefinite(b).holds == qpd::is_positive_semidefinite(b.swapped()).holds;
  }));

  bool pass = true;
  std::ostringstream d;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    if (i) d << "; ";
    d << suites[i].first << " " << (kCases - suites[i].second) << "/" << kCases;
    pass = pass && suites[i].second == 0;
  }
  return {pass, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 cyclic (1,1,1,1,-7/12) at (1,1,-5) is -204", criterion1},
      {"2 cyclic (1,-1,-1,1,-7/12) at (1,1,1) is -24", criterion2},
      {"3 boundary tensor min and zero set", criterion3},
      {"4 PD interval sweep", criterion4},
      {"5 binary criterion vs oracle", criterion5},
      {"6 normalized boundary arithmetic", criterion6},
      {"7 inequality catalog", criterion7},
      {"8 property suites", criterion8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
