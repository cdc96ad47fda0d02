#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpd {

/// Exact scalar used by every analytic predicate.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using FloatVector = std::vector<double>;

/// Parses "p/q", an integer, or a decimal literal ("-1.25", "3e-2").
/// Decimals are converted from their base-10 expansion, never through a
/// binary float. Throws std::invalid_argument on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

int sign(const Rational& value);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Nearest rational with denominator `denominator` (round half away from zero).
Rational rationalize(double value, long denominator = 1'000'000);

RationalVector rationalize(std::span<const double> values, long denominator = 1'000'000);

FloatVector to_float(std::span<const Rational> values);

}  // namespace qpd
