#include "quartic_pd/tensor.hpp"
#include "random_tensors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using qpd::Index4;
using qpd::Rational;
using qpd::RationalVector;
using qpd::SymmetricTensor4;
using ref::q;

namespace {

constexpr int kCases = 1000;

Index4 ix(int i, int j, int k, int l) {
  return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k),
          static_cast<std::uint8_t>(l)};
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("multiplicities and canonical indices") {
  CHECK(qpd::multiplicity(ix(0, 0, 0, 0)) == 1);
  CHECK(qpd::multiplicity(ix(1, 0, 0, 0)) == 4);
  CHECK(qpd::multiplicity(ix(0, 1, 0, 1)) == 6);
  CHECK(qpd::multiplicity(ix(2, 0, 1, 0)) == 12);
  CHECK(qpd::multiplicity(ix(3, 1, 2, 0)) == 24);
  CHECK(qpd::canonical(ix(2, 0, 1, 0)) == ix(0, 0, 1, 2));
  for (int n = 1; n <= 5; ++n) {
    const auto all = qpd::canonical_indices(n);
    CHECK(static_cast<long long>(all.size()) == binomial(n + 3, 4));
    CHECK(std::is_sorted(all.begin(), all.end()));
    long long total = 0;
    for (const auto& idx : all) total += qpd::multiplicity(idx);
    CHECK(total == static_cast<long long>(n) * n * n * n);
  }
}

TEST_CASE("construction validates indices") {
  CHECK_THROWS_AS(SymmetricTensor4(2, {{ix(0, 0, 0, 1), q(1)}, {ix(1, 0, 0, 0), q(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricTensor4(2, {{ix(0, 0, 0, 2), q(1)}}), std::invalid_argument);
  CHECK_THROWS(SymmetricTensor4(0));
  const SymmetricTensor4 t(3, {{ix(2, 1, 0, 0), q(5, 7)}});
  CHECK(t.at(ix(0, 2, 0, 1)) == q(5, 7));
  CHECK(t.at(ix(1, 1, 1, 1)) == 0);
  CHECK(t.entries().size() == 15);
  CHECK_FALSE(t.is_zero());
  CHECK(SymmetricTensor4(3).is_zero());
  CHECK(t.scaled(q(7)).at(ix(0, 0, 1, 2)) == q(5));
}

TEST_CASE("form and gradient match the dense reference") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 4;
    auto [t, dense] = ref::random_tensor(rng, n);
    const RationalVector x = ref::random_vector(rng, n);
    CHECK(qpd::evaluate_form(t, x) == ref::form(dense, x));
    CHECK(qpd::evaluate_gradient(t, x) == ref::gradient(dense, x));
    // Euler: x . T x^3 = T x^4.
    const RationalVector g = qpd::evaluate_gradient(t, x);
    Rational dot = 0;
    for (int i = 0; i < n; ++i) dot += g[i] * x[i];
    CHECK(dot == qpd::evaluate_form(t, x));
    const qpd::FloatForm ff(t);
    const auto xd = qpd::to_float(x);
    CHECK(ff.value(xd) == doctest::Approx(ref::form_d(dense, xd)).epsilon(1e-12));
  }
}

TEST_CASE("frozen form values") {
  // (1, -1, -1, 1, -7/12) cyclic tensor at (1,1,1).
  std::vector<std::pair<Index4, Rational>> v = {
      {ix(0, 0, 0, 0), q(1)},      {ix(1, 1, 1, 1), q(1)},      {ix(2, 2, 2, 2), q(1)},
      {ix(0, 0, 0, 1), q(-1)},     {ix(1, 1, 1, 2), q(-1)},     {ix(0, 2, 2, 2), q(-1)},
      {ix(0, 0, 0, 2), q(-1)},     {ix(0, 1, 1, 1), q(-1)},     {ix(1, 2, 2, 2), q(-1)},
      {ix(0, 0, 1, 1), q(1)},      {ix(0, 0, 2, 2), q(1)},      {ix(1, 1, 2, 2), q(1)},
      {ix(0, 0, 1, 2), q(-7, 12)}, {ix(0, 1, 1, 2), q(-7, 12)}, {ix(0, 1, 2, 2), q(-7, 12)}};
  const SymmetricTensor4 t(3, v);
  const RationalVector ones{q(1), q(1), q(1)};
  CHECK(qpd::evaluate_form(t, ones) == -24);
  CHECK(qpd::evaluate_gradient(t, ones) == RationalVector{q(-8), q(-8), q(-8)});
}

TEST_CASE("evaluate_mixed endpoints and argument checks") {
  std::mt19937_64 rng(2);
  auto [t, dense] = ref::random_tensor(rng, 3);
  const RationalVector x = ref::random_vector(rng, 3), y = ref::random_vector(rng, 3);
  CHECK(qpd::evaluate_mixed(t, x, 4, y) == qpd::evaluate_form(t, x));
  CHECK(qpd::evaluate_mixed(t, x, 0, y) == qpd::evaluate_form(t, y));
  CHECK_THROWS(qpd::evaluate_mixed(t, x, 5, y));
  CHECK_THROWS(qpd::evaluate_mixed(t, x, -1, y));
}

TEST_CASE("symmetrize averages orbits and reports asymmetry") {
  const int n = 2;
  std::vector<Rational> raw(16, Rational(0));
  raw[1] = q(4);  // (0,0,0,1)
  raw[8] = q(0);  // (1,0,0,0)
  raw[0] = q(3);
  const auto s = qpd::symmetrize(n, raw);
  CHECK(s.tensor.at(ix(0, 0, 0, 1)) == q(1));
  CHECK(s.tensor.at(ix(0, 0, 0, 0)) == q(3));
  CHECK(s.max_asymmetry == q(3));

  std::mt19937_64 rng(3);
  auto [t, dense] = ref::random_tensor(rng, 3);
  const auto again = qpd::symmetrize(3, dense.a);
  CHECK(again.tensor == t);
  CHECK(again.max_asymmetry == 0);
}

TEST_CASE("tensor_from_monomials divides by slot multiplicity") {
  // x1^3 x2 - 12 x1^2 x2 x3 + 2 x3^4
  const std::vector<qpd::Monomial> m = {
      {ix(0, 0, 0, 1), q(1)}, {ix(0, 1, 0, 2), q(-12)}, {ix(2, 2, 2, 2), q(2)}};
  const auto t = qpd::tensor_from_monomials(3, m);
  CHECK(t.at(ix(0, 0, 0, 1)) == q(1, 4));
  CHECK(t.at(ix(0, 0, 1, 2)) == q(-1));
  CHECK(t.at(ix(2, 2, 2, 2)) == q(2));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalVector x = ref::random_vector(rng, 3);
    const Rational direct = x[0] * x[0] * x[0] * x[1] - 12 * x[0] * x[0] * x[1] * x[2] + 2 * x[2] * x[2] * x[2] * x[2];
    CHECK(qpd::evaluate_form(t, x) == direct);
  }
}

TEST_CASE("property: permutation invariance of entries and form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < kCases; ++trial) {
    const int n = 2 + trial % 3;
    auto [t, dense] = ref::random_tensor(rng, n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    Index4 idx = ix(pick(rng), pick(rng), pick(rng), pick(rng));
    const Rational v = t.at(idx);
    std::shuffle(idx.begin(), idx.end(), rng);
    CHECK(t.at(idx) == v);
    // Relabel coordinates by a permutation p: (P.T)(x) = T(x o p).
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::pair<Index4, Rational>> permuted;
    for (const auto& [c, value] : t.entries()) {
      permuted.push_back({ix(p[c[0]], p[c[1]], p[c[2]], p[c[3]]), value});
    }
    const SymmetricTensor4 pt(n, permuted);
    const RationalVector x = ref::random_vector(rng, n);
    RationalVector px(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) px[p[i]] = x[i];
    CHECK(qpd::evaluate_form(pt, px) == qpd::evaluate_form(t, x));
  }
}

TEST_CASE("property: degree-4 homogeneity") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < kCases; ++trial) {
    const int n = 1 + trial % 4;
    auto [t, dense] = ref::random_tensor(rng, n);
    RationalVector x = ref::random_vector(rng, n);
    const Rational lambda = ref::random_rational(rng, -4, 4, 9);
    const Rational before = qpd::evaluate_form(t, x);
    for (auto& v : x) v *= lambda;
    CHECK(qpd::evaluate_form(t, x) == lambda * lambda * lambda * lambda * before);
  }
}

TEST_CASE("property: binomial expansion of T(x+y)^4") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < kCases; ++trial) {
    const int n = 1 + trial % 4;
    auto [t, dense] = ref::random_tensor(rng, n);
    const RationalVector x = ref::random_vector(rng, n), y = ref::random_vector(rng, n);
    RationalVector sum(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sum[i] = x[i] + y[i];
    Rational expanded = 0;
    for (int k = 0; k <= 4; ++k) expanded += Rational(static_cast<long>(binomial(4, k))) * qpd::evaluate_mixed(t, x, k, y);
    CHECK(qpd::evaluate_form(t, sum) == expanded);
    // The mixed term with three copies of x is x^3 contracted against y.
    const RationalVector g = qpd::evaluate_gradient(t, x);
    Rational gy = 0;
    for (int i = 0; i < n; ++i) gy += g[i] * y[i];
    CHECK(qpd::evaluate_mixed(t, x, 3, y) == gy);
  }
}

TEST_CASE("property: inner product with x^(x)4 equals the form") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < kCases; ++trial) {
    const int n = 1 + trial % 4;
    auto [t, dense] = ref::random_tensor(rng, n);
    const qpd::RankOneTensor4 r{ref::random_vector(rng, n)};
    const Rational form = qpd::evaluate_form(t, r.generator);
    CHECK(qpd::inner_product(t, r) == form);
    if (trial % 10 == 0) CHECK(qpd::inner_product(t, r.to_tensor()) == form);
  }
}

TEST_CASE("property: Frobenius norm of x^(x)4 is |x|^4") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < kCases; ++trial) {
    const int n = 1 + trial % 4;
    const qpd::RankOneTensor4 r{ref::random_vector(rng, n)};
    Rational sq = 0;
    for (const auto& v : r.generator) sq += v * v;
    const SymmetricTensor4 t = r.to_tensor();
    CHECK(qpd::frobenius_norm_squared(t) == sq * sq * sq * sq);
    CHECK(qpd::frobenius_norm(t) == doctest::Approx(Rational(sq * sq).get_d()).epsilon(1e-12));
  }
}

TEST_CASE("frobenius norm matches dense sum of squares") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    auto [t, dense] = ref::random_tensor(rng, 1 + trial % 4);
    Rational s = 0;
    for (const auto& v : dense.a) s += v * v;
    CHECK(qpd::frobenius_norm_squared(t) == s);
  }
  const RationalVector x{q(-6, 5), q(5), q(1)};
  Rational sq = 0;
  for (const auto& v : x) sq += v * v;
  CHECK(sq * sq == q(470596, 625));
}
