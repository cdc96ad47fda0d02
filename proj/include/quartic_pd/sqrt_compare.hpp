#pragma once

#include "quartic_pd/rational.hpp"

namespace qpd {

// Exact comparisons against rational multiples of square roots. Decided by
// sign analysis and squaring; no floating-point square roots are taken.
// All functions throw std::domain_error on a negative radicand.

/// Sign (-1, 0, +1) of a + b * sqrt(radicand).
int sign_with_sqrt(const Rational& a, const Rational& b, const Rational& radicand);

/// lhs <= coeff * sqrt(radicand)
bool sqrt_leq(const Rational& lhs, const Rational& coeff, const Rational& radicand);

/// lhs < coeff * sqrt(radicand)
bool sqrt_lt(const Rational& lhs, const Rational& coeff, const Rational& radicand);

/// lhs == coeff * sqrt(radicand)
bool sqrt_eq(const Rational& lhs, const Rational& coeff, const Rational& radicand);

}  // namespace qpd
