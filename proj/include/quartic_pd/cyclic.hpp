#pragma once

#include "quartic_pd/rational.hpp"
#include "quartic_pd/tensor.hpp"
#include "quartic_pd/verdict.hpp"

#include <optional>

namespace qpd {

/// 3-dimensional order-4 tensor constant on the five orbits of the cyclic
/// rotation x1 -> x2 -> x3 -> x1:
///   a = t1111 = t2222 = t3333
///   b = t1112 = t2223 = t1333
///   c = t1113 = t1222 = t2333
///   d = t1122 = t1133 = t2233
///   e = t1123 = t1223 = t1233
struct CyclicTernary {
  Rational a, b, c, d, e;

  /// Divides every entry by a (requires a > 0).
  CyclicTernary rescaled() const;

  friend bool operator==(const CyclicTernary&, const CyclicTernary&) = default;
};

/// As CyclicTernary, but the three x1 x2 x3-orbit entries may differ.
struct RelaxedCyclicTernary {
  Rational a, b, c, d;
  Rational e123, e223, e233;

  bool is_cyclic() const { return e123 == e223 && e223 == e233; }
  CyclicTernary as_cyclic() const;
};

SymmetricTensor4 embed(const CyclicTernary& ct);
SymmetricTensor4 embed(const RelaxedCyclicTernary& rt);

/// Recovers the parameters when `t` has the orbit pattern; nullopt otherwise.
std::optional<CyclicTernary> match_cyclic(const SymmetricTensor4& t);
std::optional<RelaxedCyclicTernary> match_relaxed(const SymmetricTensor4& t);

namespace rules {
inline constexpr const char* kCyclicSignMismatch = "cyclic-equal-sign-boundary";
inline constexpr const char* kCyclicBoundaryZero = "cyclic-psd-boundary";
inline constexpr const char* kCyclicPdInterval = "cyclic-pd-interval";
inline constexpr const char* kCyclicPdIntervalWidened = "cyclic-pd-interval-widened";
inline constexpr const char* kCyclicPdIntervalLifted = "cyclic-pd-interval-lifted";
inline constexpr const char* kCyclicPdIntervalLiftedWidened = "cyclic-pd-interval-lifted-widened";
inline constexpr const char* kCyclicPsdLifted = "cyclic-psd-lifted";
inline constexpr const char* kCyclicNecessityBound = "cyclic-necessity-bound";
inline constexpr const char* kCyclicNotCovered = "cyclic-not-covered";
inline constexpr const char* kRelaxedLower = "relaxed-pd-lower-interval";
inline constexpr const char* kRelaxedUpper = "relaxed-pd-upper-interval";
inline constexpr const char* kRelaxedLowerWidened = "relaxed-pd-lower-interval-widened";
inline constexpr const char* kRelaxedUpperWidened = "relaxed-pd-upper-interval-widened";
inline constexpr const char* kRelaxedNotCovered = "relaxed-not-covered";
}  // namespace rules

/// Smallest e for which the boundary pattern can be PSD: -7/12.
Rational necessity_threshold();

/// a = d = 1, |b| = |c| = 1, b c = -1.
bool matches_necessity_pattern(const CyclicTernary& ct);

/// True when e passes the bound (no PSD claim either way); false means the
/// tensor cannot be PSD. Throws std::invalid_argument unless the pattern holds.
bool necessity_bound_check(const CyclicTernary& ct);

/// Decision ladder for a = 1, |b| = |c| = 1. Throws std::invalid_argument
/// outside that family.
FamilyVerdict classify_cyclic(const CyclicTernary& ct);

/// PD intervals for the relaxed family. Requires a = d = 1, |b| = |c| = 1 and
/// b c = -1; throws std::invalid_argument otherwise.
FamilyVerdict classify_relaxed(const RelaxedCyclicTernary& rt);

}  // namespace qpd
