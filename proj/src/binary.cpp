#include "quartic_pd/binary.hpp"

#include "quartic_pd/sqrt_compare.hpp"

#include <stdexcept>
#include <utility>

namespace qpd {

namespace {

constexpr Index4 k1111{0, 0, 0, 0};
constexpr Index4 k1112{0, 0, 0, 1};
constexpr Index4 k1122{0, 0, 1, 1};
constexpr Index4 k1222{0, 1, 1, 1};
constexpr Index4 k2222{1, 1, 1, 1};

// Both diagonals positive from here on. c = a0 a4 > 0 and s = sqrt(c).
struct Radicals {
  const BinaryQuartic& q;
  Rational c;

  explicit Radicals(const BinaryQuartic& quartic) : q(quartic), c(quartic.a0 * quartic.a4) {}

  // |a1 sqrt(a4) - a3 sqrt(a0)| <= sqrt(6 a0 a2 a4 + 2 c sqrt(c))
  bool difference_bound() const {
    const Rational inner = 6 * q.a0 * q.a2 * q.a4;
    if (sign_with_sqrt(inner, 2 * c, c) < 0) return false;
    // (lhs)^2 = a1^2 a4 + a3^2 a0 - 2 a1 a3 s
    const Rational a = q.a1 * q.a1 * q.a4 + q.a3 * q.a3 * q.a0 - inner;
    const Rational b = -2 * q.a1 * q.a3 - 2 * c;
    return sign_with_sqrt(a, b, c) <= 0;
  }

  // |a1 sqrt(a4) + a3 sqrt(a0)| <= sqrt(6 a0 a2 a4 - 2 c sqrt(c))
  bool sum_bound() const {
    const Rational inner = 6 * q.a0 * q.a2 * q.a4;
    if (sign_with_sqrt(inner, -2 * c, c) < 0) return false;
    const Rational a = q.a1 * q.a1 * q.a4 + q.a3 * q.a3 * q.a0 - inner;
    const Rational b = 2 * q.a1 * q.a3 + 2 * c;
    return sign_with_sqrt(a, b, c) <= 0;
  }

  // -s < 3 a2 (strict) or -s <= 3 a2
  bool lower_mid(bool strict) const {
    const int sg = sign_with_sqrt(3 * q.a2, 1, c);
    return strict ? sg > 0 : sg >= 0;
  }
  // 3 a2 <= 3 s
  bool upper_mid() const { return sqrt_leq(q.a2, 1, c); }
  // a2 > s
  bool large() const { return !sqrt_leq(q.a2, 1, c); }

  // a1 sqrt(a4) == a3 sqrt(a0), scaled by sqrt(a0) > 0: a1 s == a3 a0
  bool tangent_equal() const { return sqrt_eq(q.a3 * q.a0, q.a1, c); }
  // 2 a1^2 + a0 s == 3 a0 a2
  bool double_root_relation() const { return sqrt_eq(3 * q.a0 * q.a2 - 2 * q.a1 * q.a1, q.a0, c); }
  // 3 a0 a2 < 3 a0 s, i.e. a2 < s
  bool below_s() const { return sqrt_lt(q.a2, 1, c); }
};

RationalVector witness(Rational x1, Rational x2) {
  return {std::move(x1), std::move(x2)};
}

// Witnesses for the zero-diagonal prefilter, written for a0 == 0; the caller
// swaps coordinates for the a4 == 0 mirror case.
std::optional<RationalVector> leading_zero_witness(const BinaryQuartic& q) {
  if (sgn(q.a1) != 0) {
    // f(x, 1) = 4 a1 x^3 + 6 a2 x^2 + 4 a3 x + a4: the cubic term dominates
    // once |x| > 1 + (|6 a2| + |4 a3| + |a4|) / (4 |a1|).
    Rational rest = abs(Rational(6 * q.a2)) + abs(Rational(4 * q.a3)) + abs(q.a4);
    Rational k = 1 + rest / (4 * abs(q.a1)) + 1;
    return witness(sgn(q.a1) > 0 ? Rational(-k) : k, 1);
  }
  if (sgn(q.a2) < 0) {
    // f(1, y) = y^2 (6 a2 + 4 a3 y + a4 y^2) with y small.
    Rational s = abs(Rational(4 * q.a3)) + abs(q.a4);
    Rational y = 3 * abs(q.a2) / (s + 3 * abs(q.a2));
    return witness(1, y);
  }
  // Residual quadratic 6 a2 u^2 + 4 a3 u v + a4 v^2 indefinite.
  if (sgn(q.a2) > 0) return witness(-q.a3 / (3 * q.a2), 1);
  if (sgn(q.a3) != 0) return witness(-(abs(q.a4) + 1) / (4 * q.a3), 1);
  return std::nullopt;
}

// a0 == 0, a1 == 0, a2 >= 0: f = x2^2 (6 a2 x1^2 + 4 a3 x1 x2 + a4 x2^2).
bool residual_quadratic_psd(const BinaryQuartic& q) {
  return sgn(q.a2) >= 0 && sgn(q.a4) >= 0 && 2 * q.a3 * q.a3 <= 3 * q.a2 * q.a4;
}

}  // namespace

BinaryQuartic BinaryQuartic::from_tensor(const SymmetricTensor4& t) {
  if (t.dim() != 2) throw std::invalid_argument("binary quartic requires a 2-dimensional tensor");
  return {t.at(k1111), t.at(k1112), t.at(k1122), t.at(k1222), t.at(k2222)};
}

SymmetricTensor4 BinaryQuartic::to_tensor() const {
  return SymmetricTensor4(2, {{k1111, a0}, {k1112, a1}, {k1122, a2}, {k1222, a3}, {k2222, a4}});
}

Rational BinaryQuartic::value(const Rational& x1, const Rational& x2) const {
  const Rational x1s = x1 * x1, x2s = x2 * x2;
  return a0 * x1s * x1s + 4 * a1 * x1s * x1 * x2 + 6 * a2 * x1s * x2s + 4 * a3 * x1 * x2s * x2 +
         a4 * x2s * x2s;
}

DiscriminantParts discriminant_parts(const BinaryQuartic& q) {
  DiscriminantParts d;
  d.eta = q.a0 * q.a4 - 4 * q.a1 * q.a3 + 3 * q.a2 * q.a2;
  d.chi = q.a0 * q.a2 * q.a4 + 2 * q.a1 * q.a2 * q.a3 - q.a2 * q.a2 * q.a2 - q.a0 * q.a3 * q.a3 -
          q.a1 * q.a1 * q.a4;
  d.delta_sign = sgn(Rational(d.eta * d.eta * d.eta - 27 * d.chi * d.chi));
  return d;
}

PrefilterResult prefilter_zero_diagonal(const BinaryQuartic& q) {
  PrefilterResult r;
  if (sgn(q.a0) < 0) {
    r.pass = false;
    r.reason = "t1111 < 0";
    r.witness = witness(1, 0);
    return r;
  }
  if (sgn(q.a4) < 0) {
    r.pass = false;
    r.reason = "t2222 < 0";
    r.witness = witness(0, 1);
    return r;
  }
  const bool zero0 = sgn(q.a0) == 0;
  const bool zero4 = sgn(q.a4) == 0;
  if (!zero0 && !zero4) return r;

  r.residual = true;
  auto fail = [&](const char* reason, bool mirrored) {
    r.pass = false;
    r.reason = reason;
    if (auto w = leading_zero_witness(mirrored ? q.swapped() : q)) {
      r.witness = mirrored ? witness((*w)[1], (*w)[0]) : *w;
    }
  };

  if (zero0 && zero4) {
    if (sgn(q.a1) != 0 || sgn(q.a3) != 0) {
      fail("t1111 = t2222 = 0 requires t1112 = t1222 = 0", sgn(q.a1) == 0);
    } else if (sgn(q.a2) < 0) {
      fail("t1111 = t2222 = 0 requires t1122 >= 0", false);
    }
    return r;
  }
  if (zero0) {
    if (sgn(q.a1) != 0) {
      fail("t1111 = 0 requires t1112 = 0", false);
    } else if (sgn(q.a2) < 0) {
      fail("t1111 = 0 requires t1122 >= 0", false);
    }
    return r;
  }
  if (sgn(q.a3) != 0) {
    fail("t2222 = 0 requires t1222 = 0", true);
  } else if (sgn(q.a2) < 0) {
    fail("t2222 = 0 requires t1122 >= 0", true);
  }
  return r;
}

CriterionResult is_positive_definite(const BinaryQuartic& q) {
  if (sgn(q.a0) < 0 || sgn(q.a4) < 0) return {false, rules::kBinaryNegativeDiagonal};
  // T e_i^4 = 0 for a zero diagonal.
  if (sgn(q.a0) == 0 || sgn(q.a4) == 0) return {false, rules::kBinaryZeroDiagonalResidual};

  const Radicals r(q);
  const int delta = discriminant_parts(q).delta_sign;
  if (delta == 0 && r.tangent_equal() && r.double_root_relation() && r.below_s()) {
    return {true, rules::kBinaryPdBranchA};
  }
  if (delta > 0 && r.difference_bound()) {
    if (r.lower_mid(true) && r.upper_mid()) return {true, rules::kBinaryPdBranchBi};
    if (r.large() && r.sum_bound()) return {true, rules::kBinaryPdBranchBii};
  }
  return {false, rules::kBinaryPdFailed};
}

CriterionResult is_positive_semidefinite(const BinaryQuartic& q) {
  const PrefilterResult pre = prefilter_zero_diagonal(q);
  if (!pre.pass) {
    const bool negative = sgn(q.a0) < 0 || sgn(q.a4) < 0;
    return {false, negative ? rules::kBinaryNegativeDiagonal : rules::kBinaryZeroDiagonalNecessary};
  }
  if (pre.residual) {
    const bool ok = sgn(q.a0) == 0 ? residual_quadratic_psd(q) : residual_quadratic_psd(q.swapped());
    return {ok, rules::kBinaryZeroDiagonalResidual};
  }

  const Radicals r(q);
  if (discriminant_parts(q).delta_sign >= 0 && r.difference_bound()) {
    if (r.lower_mid(false) && r.upper_mid()) return {true, rules::kBinaryPsdBranchI};
    if (r.large() && r.sum_bound()) return {true, rules::kBinaryPsdBranchIi};
  }
  return {false, rules::kBinaryPsdFailed};
}

Verdict classify_binary(const BinaryQuartic& q) {
  Verdict v;
  const PrefilterResult pre = prefilter_zero_diagonal(q);
  if (!pre.pass) {
    v.kind = Definiteness::Indefinite;
    const bool negative = sgn(q.a0) < 0 || sgn(q.a4) < 0;
    v.rule = negative ? rules::kBinaryNegativeDiagonal : rules::kBinaryZeroDiagonalNecessary;
    v.witness = pre.witness;
    return v;
  }

  if (const auto pd = is_positive_definite(q); pd.holds) {
    v.kind = Definiteness::PositiveDefinite;
    v.rule = pd.rule;
    return v;
  }
  const auto psd = is_positive_semidefinite(q);
  v.rule = psd.rule;
  if (psd.holds) {
    v.kind = Definiteness::PositiveSemidefiniteNotDefinite;
    if (pre.residual) v.witness = sgn(q.a0) == 0 ? witness(1, 0) : witness(0, 1);
  } else {
    v.kind = Definiteness::Indefinite;
    if (pre.residual) {
      const bool mirrored = sgn(q.a0) != 0;
      if (auto w = leading_zero_witness(mirrored ? q.swapped() : q)) {
        v.witness = mirrored ? witness((*w)[1], (*w)[0]) : *w;
      }
    }
  }
  return v;
}

bool in_normalized_domain(const BinaryQuartic& q) {
  if (q.a0 != 1 || q.a4 != 1) return false;
  if (q.a2 == 1 && abs(q.a1) <= 1 && abs(q.a3) <= 1) return true;
  return abs(q.a1) == 1 && abs(q.a2) == 1 && abs(q.a3) == 1;
}

NormalizedCheck check_normalized_pm1(const BinaryQuartic& q) {
  if (!in_normalized_domain(q)) {
    throw std::invalid_argument(
        "check_normalized_pm1: requires t1111 = t2222 = 1 and either t1122 = 1 with "
        "|t1112|, |t1222| <= 1 or all entries of modulus 1; use classify_binary");
  }
  NormalizedCheck out;
  out.verdict.rule = rules::kBinaryFastPath;
  if (q.a2 != 1) {
    // All entries +-1 with t1122 = -1: never PSD.
    out.verdict.kind = Definiteness::Indefinite;
    return out;
  }
  const Rational diff = q.a3 - q.a1;
  const Rational diff2 = diff * diff;
  const Rational base = 1 - q.a1 * q.a3;
  out.lhs = 27 * diff2 * diff2;
  out.rhs = 64 * base * base * base;
  if (*out.lhs < *out.rhs) {
    out.verdict.kind = Definiteness::PositiveDefinite;
  } else if (*out.lhs == *out.rhs) {
    out.verdict.kind = Definiteness::PositiveSemidefiniteNotDefinite;
  } else {
    out.verdict.kind = Definiteness::Indefinite;
  }
  return out;
}

}  // namespace qpd
