#pragma once

#include "quartic_pd/oracle.hpp"
#include "quartic_pd/rational.hpp"
#include "quartic_pd/tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qpd {

enum class Expectation { Holds, Fails };

/// P(x) = (x1+x2+x3)^4 - 8 (x1^3 x2 + x1 x3^3 + x2^3 x3)
///        - x1 x2 x3 (w1 x1 + w2 x2 + w3 x3)
/// claimed >= 0 (or > 0 when strict) for x != 0. The exchanged variant uses
/// x1 x2^3 + x1^3 x3 + x2 x3^3 in the cubic-linear group instead.
struct WeightedInequality {
  std::string label;
  std::array<Rational, 3> weights;
  bool strict = true;
  bool exchanged = false;
  Expectation expected = Expectation::Holds;
  /// Rational point where P < 0 is expected (expected-fail entries).
  std::optional<RationalVector> fail_point;
  /// Rational point where P = 0 is expected (non-strict entries).
  std::optional<RationalVector> equality_point;

  bool uniform() const { return weights[0] == weights[1] && weights[1] == weights[2]; }
  SymmetricTensor4 tensor() const;
};

/// Same inequality with the cubic-linear monomials swapped; fail and equality
/// points are mirrored (x2 <-> x3), which is exact when w2 == w3.
WeightedInequality exchanged(const WeightedInequality& ineq);

std::vector<WeightedInequality> builtin_catalog();

/// Catalog followed by the exchanged variant of every entry.
std::vector<WeightedInequality> catalog_with_exchanged();

std::optional<WeightedInequality> find_inequality(const std::vector<WeightedInequality>& catalog,
                                                  const std::string& label);

/// Exact P(x), evaluated through the inequality's tensor.
Rational exact_spot_check(const WeightedInequality& ineq, std::span<const Rational> x);

struct InequalityReport {
  std::string label;
  double sphere_min = 0.0;
  FloatVector min_point;
  std::vector<FloatVector> equality_points;
  bool holds = false;
  /// Outcome matches the catalog expectation, including exact checks of the
  /// fail point / equality point.
  bool as_expected = false;
  bool expected_fail = false;
  /// Exact P at the fail point or equality point, when one is given.
  std::optional<Rational> exact_value;
  /// The catalog's fail point or equality point.
  std::optional<RationalVector> witness;
  std::string status;
};

InequalityReport verify(const WeightedInequality& ineq, const OracleConfig& cfg = {});

}  // namespace qpd
