#pragma once

#include "quartic_pd/rational.hpp"
#include "quartic_pd/tensor.hpp"
#include "quartic_pd/verdict.hpp"

#include <optional>
#include <string>

namespace qpd {

/// Order-4, 2-dimensional symmetric tensor:
///   a0 x1^4 + 4 a1 x1^3 x2 + 6 a2 x1^2 x2^2 + 4 a3 x1 x2^3 + a4 x2^4
/// with a0 = t1111, a1 = t1112, a2 = t1122, a3 = t1222, a4 = t2222.
struct BinaryQuartic {
  Rational a0, a1, a2, a3, a4;

  static BinaryQuartic from_tensor(const SymmetricTensor4& t);
  SymmetricTensor4 to_tensor() const;

  Rational value(const Rational& x1, const Rational& x2) const;
  /// Exchange x1 and x2.
  BinaryQuartic swapped() const { return {a4, a3, a2, a1, a0}; }
  BinaryQuartic scaled(const Rational& c) const { return {c * a0, c * a1, c * a2, c * a3, c * a4}; }

  friend bool operator==(const BinaryQuartic&, const BinaryQuartic&) = default;
};

struct DiscriminantParts {
  Rational eta;
  Rational chi;
  /// sign(eta^3 - 27 chi^2), which is the sign of the discriminant.
  int delta_sign = 0;
};

DiscriminantParts discriminant_parts(const BinaryQuartic& q);

namespace rules {
inline constexpr const char* kBinaryNegativeDiagonal = "binary-negative-diagonal";
inline constexpr const char* kBinaryZeroDiagonalNecessary = "binary-zero-diagonal-necessary";
inline constexpr const char* kBinaryZeroDiagonalResidual = "binary-zero-diagonal-residual";
inline constexpr const char* kBinaryPdBranchA = "binary-pd-branch-a";
inline constexpr const char* kBinaryPdBranchBi = "binary-pd-branch-b-i";
inline constexpr const char* kBinaryPdBranchBii = "binary-pd-branch-b-ii";
inline constexpr const char* kBinaryPdFailed = "binary-pd-criterion-failed";
inline constexpr const char* kBinaryPsdBranchI = "binary-psd-branch-i";
inline constexpr const char* kBinaryPsdBranchIi = "binary-psd-branch-ii";
inline constexpr const char* kBinaryPsdFailed = "binary-psd-criterion-failed";
inline constexpr const char* kBinaryFastPath = "binary-normalized-fast-path";
}  // namespace rules

/// Outcome of one yes/no criterion with the rule that decided it.
struct CriterionResult {
  bool holds = false;
  std::string rule;
};

/// Exact PD test. Positive diagonals go through the discriminant criterion;
/// a zero diagonal is never PD; a negative diagonal fails immediately.
CriterionResult is_positive_definite(const BinaryQuartic& q);

/// Exact PSD test; zero diagonals are decided by the residual quadratic.
CriterionResult is_positive_semidefinite(const BinaryQuartic& q);

struct PrefilterResult {
  bool pass = true;
  /// True when a diagonal entry is zero and the residual analysis decides.
  bool residual = false;
  std::string reason;
  std::optional<RationalVector> witness;
};

/// Necessary conditions for PSD on nonpositive diagonals.
PrefilterResult prefilter_zero_diagonal(const BinaryQuartic& q);

/// Full classification: PD, PSD-not-PD, or Indefinite.
Verdict classify_binary(const BinaryQuartic& q);

struct NormalizedCheck {
  Verdict verdict;
  /// 27 (a3 - a1)^4 and 64 (1 - a1 a3)^3 when a2 == 1.
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
};

/// Closed-form path for a0 = a4 = a2 = 1, |a1|, |a3| <= 1, and for
/// a0 = a4 = 1 with |a1| = |a2| = |a3| = 1. Throws std::invalid_argument
/// outside that domain.
NormalizedCheck check_normalized_pm1(const BinaryQuartic& q);

bool in_normalized_domain(const BinaryQuartic& q);

}  // namespace qpd
