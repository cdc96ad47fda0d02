#include "quartic_pd/cyclic.hpp"

#include <array>
#include <initializer_list>
#include <stdexcept>

namespace qpd {

namespace {

using Orbit = std::array<Index4, 3>;

constexpr Orbit kOrbitA{{{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}}};
constexpr Orbit kOrbitB{{{0, 0, 0, 1}, {1, 1, 1, 2}, {0, 2, 2, 2}}};
constexpr Orbit kOrbitC{{{0, 0, 0, 2}, {0, 1, 1, 1}, {1, 2, 2, 2}}};
constexpr Orbit kOrbitD{{{0, 0, 1, 1}, {0, 0, 2, 2}, {1, 1, 2, 2}}};
constexpr Index4 k1123{0, 0, 1, 2};
constexpr Index4 k1223{0, 1, 1, 2};
constexpr Index4 k1233{0, 1, 2, 2};

const Rational kLower{-7, 12};
const Rational kUpper{-1, 6};
const Rational kUpperWidened{-5, 36};
const Rational kRelaxedSplit{-1, 4};
const Rational kRelaxedSplitWidened{-5, 18};

void add_orbit(std::vector<std::pair<Index4, Rational>>& values, const Orbit& orbit,
               const Rational& v) {
  for (const auto& idx : orbit) values.emplace_back(idx, v);
}

std::optional<Rational> orbit_value(const SymmetricTensor4& t, const Orbit& orbit) {
  const Rational& v = t.at(orbit[0]);
  if (t.at(orbit[1]) != v || t.at(orbit[2]) != v) return std::nullopt;
  return v;
}

bool unit(const Rational& v) { return v == 1 || v == -1; }

// lo < v <= hi, or lo <= v <= hi when lo is closed.
bool in_interval(const Rational& v, const Rational& lo, bool lo_open, const Rational& hi) {
  return (lo_open ? v > lo : v >= lo) && v <= hi;
}

bool all_in(std::initializer_list<const Rational*> values, const Rational& lo, bool lo_open,
            const Rational& hi) {
  for (const Rational* v : values) {
    if (!in_interval(*v, lo, lo_open, hi)) return false;
  }
  return true;
}

RationalVector ones() { return {Rational(1), Rational(1), Rational(1)}; }

}  // namespace

CyclicTernary CyclicTernary::rescaled() const {
  if (sgn(a) <= 0) throw std::invalid_argument("rescale requires t1111 > 0");
  return {1, b / a, c / a, d / a, e / a};
}

CyclicTernary RelaxedCyclicTernary::as_cyclic() const {
  if (!is_cyclic()) throw std::invalid_argument("relaxed tensor has unequal x1x2x3 entries");
  return {a, b, c, d, e123};
}

SymmetricTensor4 embed(const RelaxedCyclicTernary& rt) {
  std::vector<std::pair<Index4, Rational>> values;
  add_orbit(values, kOrbitA, rt.a);
  add_orbit(values, kOrbitB, rt.b);
  add_orbit(values, kOrbitC, rt.c);
  add_orbit(values, kOrbitD, rt.d);
  values.emplace_back(k1123, rt.e123);
  values.emplace_back(k1223, rt.e223);
  values.emplace_back(k1233, rt.e233);
  return SymmetricTensor4(3, values);
}

SymmetricTensor4 embed(const CyclicTernary& ct) {
  return embed(RelaxedCyclicTernary{ct.a, ct.b, ct.c, ct.d, ct.e, ct.e, ct.e});
}

std::optional<RelaxedCyclicTernary> match_relaxed(const SymmetricTensor4& t) {
  if (t.dim() != 3) return std::nullopt;
  auto a = orbit_value(t, kOrbitA);
  auto b = orbit_value(t, kOrbitB);
  auto c = orbit_value(t, kOrbitC);
  auto d = orbit_value(t, kOrbitD);
  if (!a || !b || !c || !d) return std::nullopt;
  return RelaxedCyclicTernary{*a, *b, *c, *d, t.at(k1123), t.at(k1223), t.at(k1233)};
}

std::optional<CyclicTernary> match_cyclic(const SymmetricTensor4& t) {
  auto rt = match_relaxed(t);
  if (!rt || !rt->is_cyclic()) return std::nullopt;
  return rt->as_cyclic();
}

Rational necessity_threshold() { return kLower; }

bool matches_necessity_pattern(const CyclicTernary& ct) {
  return ct.a == 1 && ct.d == 1 && unit(ct.b) && unit(ct.c) && ct.b * ct.c == -1;
}

bool necessity_bound_check(const CyclicTernary& ct) {
  if (!matches_necessity_pattern(ct)) {
    throw std::invalid_argument(
        "necessity bound needs t1111 = t1122 = 1, |t1112| = |t1222| = 1, t1112 t1222 = -1; "
        "use the numeric oracle for other tensors");
  }
  return ct.e >= kLower;
}

FamilyVerdict classify_cyclic(const CyclicTernary& ct) {
  if (ct.a != 1 || !unit(ct.b) || !unit(ct.c)) {
    throw std::invalid_argument(
        "classify_cyclic needs t1111 = 1 and |t1112| = |t1222| = 1 (rescale first)");
  }
  FamilyVerdict v;
  const bool opposite = ct.b * ct.c == -1;

  if (!opposite && ct.d == 1 && ct.e == kLower) {
    v.kind = Definiteness::Indefinite;
    v.rule = rules::kCyclicSignMismatch;
    v.witness = ct.b == 1 ? RationalVector{1, 1, -5} : ones();
    return v;
  }
  if (opposite && ct.d == 1 && ct.e == kLower) {
    v.kind = Definiteness::PositiveSemidefiniteNotDefinite;
    v.rule = rules::kCyclicBoundaryZero;
    v.witness = ones();
    return v;
  }
  if (opposite && ct.d >= 1 && in_interval(ct.e, kLower, true, kUpperWidened)) {
    v.kind = Definiteness::PositiveDefinite;
    const bool widened = ct.e > kUpper;
    if (ct.d == 1) {
      v.rule = widened ? rules::kCyclicPdIntervalWidened : rules::kCyclicPdInterval;
    } else {
      v.rule = widened ? rules::kCyclicPdIntervalLiftedWidened : rules::kCyclicPdIntervalLifted;
    }
    return v;
  }
  if (opposite && ct.d >= 1 && ct.e == kLower) {
    v.kind = Definiteness::PositiveSemidefinite;
    v.rule = rules::kCyclicPsdLifted;
    return v;
  }
  if (ct.e < kLower && matches_necessity_pattern(ct)) {
    // T(1,1,1) = 21 + 36 e < 0
    v.kind = Definiteness::Indefinite;
    v.rule = rules::kCyclicNecessityBound;
    v.witness = ones();
    return v;
  }
  v.kind = Definiteness::Undetermined;
  v.rule = rules::kCyclicNotCovered;
  return v;
}

FamilyVerdict classify_relaxed(const RelaxedCyclicTernary& rt) {
  if (rt.a != 1 || rt.d != 1 || !unit(rt.b) || !unit(rt.c) || rt.b * rt.c != -1) {
    throw std::invalid_argument(
        "classify_relaxed needs t_iiii = t_iijj = 1, |t_iiij| = 1 and t_ijjj t_iiij = -1");
  }
  FamilyVerdict v;
  const auto es = {&rt.e123, &rt.e223, &rt.e233};
  v.kind = Definiteness::PositiveDefinite;
  if (all_in(es, kLower, true, kRelaxedSplit)) {
    v.rule = rules::kRelaxedLower;
  } else if (all_in(es, kRelaxedSplit, false, kUpper)) {
    v.rule = rules::kRelaxedUpper;
  } else if (all_in(es, kLower, true, kRelaxedSplitWidened)) {
    v.rule = rules::kRelaxedLowerWidened;
  } else if (all_in(es, kRelaxedSplitWidened, false, kUpper)) {
    v.rule = rules::kRelaxedUpperWidened;
  } else {
    v.kind = Definiteness::Undetermined;
    v.rule = rules::kRelaxedNotCovered;
  }
  return v;
}

}  // namespace qpd
