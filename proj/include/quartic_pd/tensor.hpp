#pragma once

#include "quartic_pd/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace qpd {

/// Sorted 0-based index tuple (i <= j <= k <= l) naming one canonical slot.
using Index4 = std::array<std::uint8_t, 4>;

Index4 canonical(Index4 index);

/// Number of distinct orderings of `index` (1, 4, 6, 12 or 24).
int multiplicity(const Index4& index);

/// All C(n+3,4) canonical indices of an n-dimensional order-4 tensor, in
/// lexicographic order.
std::vector<Index4> canonical_indices(int dim);

/// Order-4 symmetric tensor in compressed canonical storage.
///
/// Every canonical slot is present (zero when not set) and the object is
/// immutable once built. Lookup accepts any permutation of an index.
class SymmetricTensor4 {
 public:
  SymmetricTensor4() = default;

  /// Zero tensor of dimension `dim` (>= 1).
  explicit SymmetricTensor4(int dim);

  /// Builds from canonical values; indices are canonicalized, duplicates throw.
  SymmetricTensor4(int dim, const std::vector<std::pair<Index4, Rational>>& values);

  int dim() const { return dim_; }

  const Rational& at(Index4 index) const;

  const std::map<Index4, Rational>& entries() const { return entries_; }

  bool is_zero() const;

  SymmetricTensor4 scaled(const Rational& factor) const;

  friend bool operator==(const SymmetricTensor4&, const SymmetricTensor4&) = default;

 private:
  int dim_ = 0;
  std::map<Index4, Rational> entries_;
};

/// x^{(x)4}, stored implicitly by its generator.
struct RankOneTensor4 {
  RationalVector generator;

  Rational entry(Index4 index) const;
  SymmetricTensor4 to_tensor() const;
};

/// sum over all n^4 tuples of t_{ijkl} x_i x_j x_k x_l.
Rational evaluate_form(const SymmetricTensor4& t, std::span<const Rational> x);

/// k-th component: sum of t_{k i2 i3 i4} x_{i2} x_{i3} x_{i4}.
RationalVector evaluate_gradient(const SymmetricTensor4& t, std::span<const Rational> x);

/// Mixed form with `k` copies of x and 4-k copies of y.
Rational evaluate_mixed(const SymmetricTensor4& t, std::span<const Rational> x, int k,
                        std::span<const Rational> y);

Rational inner_product(const SymmetricTensor4& t, const SymmetricTensor4& a);
Rational inner_product(const SymmetricTensor4& t, const RankOneTensor4& a);

Rational frobenius_norm_squared(const SymmetricTensor4& t);
double frobenius_norm(const SymmetricTensor4& t);

struct Symmetrized {
  SymmetricTensor4 tensor;
  /// Largest |raw - canonical average| over all raw entries.
  Rational max_asymmetry;
};

/// `raw` holds n^4 entries, row-major in (i, j, k, l).
Symmetrized symmetrize(int dim, std::span<const Rational> raw);

/// A quartic monomial x_i x_j x_k x_l with its coefficient in the polynomial.
struct Monomial {
  Index4 index;
  Rational coefficient;
};

/// Builds the tensor whose form equals the given polynomial: each monomial's
/// coefficient is divided by the multiplicity of its slot. Repeated monomials
/// accumulate.
SymmetricTensor4 tensor_from_monomials(int dim, std::span<const Monomial> monomials);

/// Double-precision compiled form used by the numeric oracle.
class FloatForm {
 public:
  explicit FloatForm(const SymmetricTensor4& t);

  int dim() const { return dim_; }
  double value(std::span<const double> x) const;
  /// Returns T x^3 (so that dot(result, x) == value(x)).
  void gradient(std::span<const double> x, std::span<double> out) const;
  /// Sum of |coefficient * multiplicity|, a bound on |Tx^4| over the unit sphere.
  double scale() const { return scale_; }

 private:
  struct Term {
    double weight;
    Index4 index;
  };
  int dim_;
  std::vector<Term> terms_;
  double scale_ = 0.0;
};

double evaluate_form(const FloatForm& form, std::span<const double> x);

}  // namespace qpd
