#include "quartic_pd/inequalities.hpp"

#include <algorithm>
#include <cmath>

namespace qpd {

namespace {

constexpr Index4 idx(int i, int j, int k, int l) {
  return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
          static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(l)};
}

std::string weight_label(const std::array<Rational, 3>& w) {
  if (w[0] == w[1] && w[1] == w[2]) return to_string(w[0]) + "u";
  return to_string(w[0]) + "-" + to_string(w[1]) + "-" + to_string(w[2]);
}

WeightedInequality holds(std::array<Rational, 3> w) {
  WeightedInequality ineq;
  ineq.label = weight_label(w);
  ineq.weights = std::move(w);
  return ineq;
}

WeightedInequality uniform_holds(const Rational& c) { return holds({c, c, c}); }

WeightedInequality fails(std::array<Rational, 3> w, RationalVector point) {
  WeightedInequality ineq = holds(std::move(w));
  ineq.expected = Expectation::Fails;
  ineq.fail_point = std::move(point);
  return ineq;
}

bool near_pair(const std::vector<FloatVector>& points, const FloatVector& unit, double tol) {
  if (points.size() != 2) return false;
  FloatVector neg = unit;
  for (double& v : neg) v = -v;
  auto close = [tol](const FloatVector& a, const FloatVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s) <= tol;
  };
  return (close(points[0], unit) && close(points[1], neg)) ||
         (close(points[0], neg) && close(points[1], unit));
}

}  // namespace

SymmetricTensor4 WeightedInequality::tensor() const {
  std::vector<Monomial> monomials;
  // (x1 + x2 + x3)^4: every ordered index tuple once.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) monomials.push_back({idx(i, j, k, l), Rational(1)});

  const Rational minus8{-8};
  if (exchanged) {
    monomials.push_back({idx(0, 1, 1, 1), minus8});  // x1 x2^3
    monomials.push_back({idx(0, 0, 0, 2), minus8});  // x1^3 x3
    monomials.push_back({idx(1, 2, 2, 2), minus8});  // x2 x3^3
  } else {
    monomials.push_back({idx(0, 0, 0, 1), minus8});  // x1^3 x2
    monomials.push_back({idx(0, 2, 2, 2), minus8});  // x1 x3^3
    monomials.push_back({idx(1, 1, 1, 2), minus8});  // x2^3 x3
  }
  monomials.push_back({idx(0, 0, 1, 2), -weights[0]});
  monomials.push_back({idx(0, 1, 1, 2), -weights[1]});
  monomials.push_back({idx(0, 1, 2, 2), -weights[2]});
  return tensor_from_monomials(3, monomials);
}

WeightedInequality exchanged(const WeightedInequality& ineq) {
  WeightedInequality out = ineq;
  out.exchanged = !ineq.exchanged;
  out.label = ineq.exchanged ? ineq.label.substr(0, ineq.label.size() - 2) : ineq.label + "-x";
  // P_exchanged(x1, x2, x3) = P(x1, x3, x2) with w2 and w3 swapped, so the
  // permuted points carry over whenever w2 == w3.
  auto swap23 = [](std::optional<RationalVector>& p) {
    if (p) std::swap((*p)[1], (*p)[2]);
  };
  swap23(out.fail_point);
  swap23(out.equality_point);
  return out;
}

std::vector<WeightedInequality> builtin_catalog() {
  std::vector<WeightedInequality> c;

  WeightedInequality boundary = uniform_holds(19);
  boundary.strict = false;
  boundary.equality_point = RationalVector{1, 1, 1};
  c.push_back(boundary);

  for (int w : {14, 15, 16, 17, 18}) c.push_back(uniform_holds(w));
  c.push_back(uniform_holds(Rational(41, 3)));

  c.push_back(holds({19, 17, 15}));
  c.push_back(holds({19, 16, 15}));
  c.push_back(holds({15, 14, 14}));
  c.push_back(holds({15, 16, 14}));
  c.push_back(holds({17, 15, 18}));
  c.push_back(holds({Rational(46, 3), 14, 14}));

  const RationalVector split_point{Rational(-6, 5), 5, 1};
  for (int w : {19, 18, 17, 16}) c.push_back(fails({w, 14, 14}, split_point));
  c.push_back(fails({Rational(41, 3), 15, 15}, {Rational(-47, 5), -2, Rational(23, 10)}));
  return c;
}

std::vector<WeightedInequality> catalog_with_exchanged() {
  std::vector<WeightedInequality> out = builtin_catalog();
  const std::size_t base = out.size();
  for (std::size_t i = 0; i < base; ++i) out.push_back(exchanged(out[i]));
  return out;
}

std::optional<WeightedInequality> find_inequality(const std::vector<WeightedInequality>& catalog,
                                                  const std::string& label) {
  for (const auto& ineq : catalog) {
    if (ineq.label == label) return ineq;
  }
  return std::nullopt;
}

Rational exact_spot_check(const WeightedInequality& ineq, std::span<const Rational> x) {
  return evaluate_form(ineq.tensor(), x);
}

InequalityReport verify(const WeightedInequality& ineq, const OracleConfig& cfg) {
  const SymmetricTensor4 t = ineq.tensor();
  const OracleResult min = sphere_minimize(t, cfg);
  const ZeroSet zeros = zero_set_probe(t, cfg);

  InequalityReport r;
  r.label = ineq.label;
  r.sphere_min = min.min_value;
  r.min_point = min.minimizer;
  r.equality_points = zeros.points;
  if (ineq.strict) {
    r.holds = min.min_value > cfg.classify_margin && zeros.points.empty() && !zeros.degenerate;
  } else {
    r.holds = min.min_value >= -cfg.classify_margin;
  }

  if (ineq.expected == Expectation::Fails) {
    r.expected_fail = true;
    bool exact_negative = true;
    if (ineq.fail_point) {
      r.exact_value = exact_spot_check(ineq, *ineq.fail_point);
      r.witness = ineq.fail_point;
      exact_negative = sgn(*r.exact_value) < 0;
    }
    r.as_expected = !r.holds && exact_negative;
    r.status = r.as_expected ? "FAIL(expected)" : "UNEXPECTED-HOLD";
    return r;
  }

  r.as_expected = r.holds;
  if (ineq.equality_point) {
    r.exact_value = exact_spot_check(ineq, *ineq.equality_point);
    r.witness = ineq.equality_point;
    const FloatVector unit = unit_witness(*ineq.equality_point);
    r.as_expected = r.as_expected && sgn(*r.exact_value) == 0 &&
                    near_pair(r.equality_points, unit, 1e-4);
  }
  if (r.as_expected) {
    r.status = ineq.strict ? "HOLDS" : "HOLDS(equality)";
  } else {
    r.status = "UNEXPECTED-FAIL";
  }
  return r;
}

}  // namespace qpd
