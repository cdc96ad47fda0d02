#include "quartic_pd/sqrt_compare.hpp"

#include <stdexcept>

namespace qpd {

int sign_with_sqrt(const Rational& a, const Rational& b, const Rational& radicand) {
  if (sgn(radicand) < 0) throw std::domain_error("negative radicand");
  const int sa = sgn(a);
  const int sb = sgn(radicand) == 0 ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins.
  const int cmp = ::cmp(Rational(a * a), Rational(b * b * radicand));
  if (cmp > 0) return sa;
  if (cmp < 0) return sb;
  return 0;
}

bool sqrt_leq(const Rational& lhs, const Rational& coeff, const Rational& radicand) {
  return sign_with_sqrt(-lhs, coeff, radicand) >= 0;
}

bool sqrt_lt(const Rational& lhs, const Rational& coeff, const Rational& radicand) {
  return sign_with_sqrt(-lhs, coeff, radicand) > 0;
}

bool sqrt_eq(const Rational& lhs, const Rational& coeff, const Rational& radicand) {
  return sign_with_sqrt(-lhs, coeff, radicand) == 0;
}

}  // namespace qpd
