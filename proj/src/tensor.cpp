#include "quartic_pd/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qpd {

namespace {

void require_dim(const SymmetricTensor4& t, std::size_t n, const char* what) {
  if (static_cast<std::size_t>(t.dim()) != n) {
    throw std::invalid_argument(std::string(what) + ": vector length " + std::to_string(n) +
                                " does not match tensor dimension " + std::to_string(t.dim()));
  }
}

const Rational kZero{0};

}  // namespace

Index4 canonical(Index4 index) {
  std::sort(index.begin(), index.end());
  return index;
}

int multiplicity(const Index4& index) {
  Index4 s = canonical(index);
  // 4! / prod(run_length!)
  int denom = 1;
  int run = 1;
  for (std::size_t p = 1; p < 4; ++p) {
    if (s[p] == s[p - 1]) {
      ++run;
      denom *= run;
    } else {
      run = 1;
    }
  }
  return 24 / denom;
}

std::vector<Index4> canonical_indices(int dim) {
  std::vector<Index4> out;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = j; k < dim; ++k)
        for (int l = k; l < dim; ++l)
          out.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                         static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(l)});
  return out;
}

SymmetricTensor4::SymmetricTensor4(int dim) : dim_(dim) {
  if (dim < 1 || dim > 255) throw std::invalid_argument("tensor dimension must be in [1, 255]");
  for (const auto& idx : canonical_indices(dim)) entries_.emplace(idx, Rational(0));
}

SymmetricTensor4::SymmetricTensor4(int dim, const std::vector<std::pair<Index4, Rational>>& values)
    : SymmetricTensor4(dim) {
  std::map<Index4, bool> seen;
  for (const auto& [index, value] : values) {
    for (auto c : index) {
      if (c >= dim) throw std::invalid_argument("tensor index component out of range");
    }
    Index4 key = canonical(index);
    if (seen[key]) throw std::invalid_argument("canonical slot assigned twice");
    seen[key] = true;
    entries_[key] = value;
  }
}

const Rational& SymmetricTensor4::at(Index4 index) const {
  auto it = entries_.find(canonical(index));
  if (it == entries_.end()) return kZero;
  return it->second;
}

bool SymmetricTensor4::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return sgn(kv.second) == 0; });
}

SymmetricTensor4 SymmetricTensor4::scaled(const Rational& factor) const {
  SymmetricTensor4 out = *this;
  for (auto& [idx, value] : out.entries_) value *= factor;
  return out;
}

Rational RankOneTensor4::entry(Index4 index) const {
  return generator.at(index[0]) * generator.at(index[1]) * generator.at(index[2]) *
         generator.at(index[3]);
}

SymmetricTensor4 RankOneTensor4::to_tensor() const {
  const int n = static_cast<int>(generator.size());
  std::vector<std::pair<Index4, Rational>> values;
  for (const auto& idx : canonical_indices(n)) values.emplace_back(idx, entry(idx));
  return SymmetricTensor4(n, values);
}

Rational evaluate_form(const SymmetricTensor4& t, std::span<const Rational> x) {
  require_dim(t, x.size(), "evaluate_form");
  Rational sum = 0;
  for (const auto& [idx, value] : t.entries()) {
    if (sgn(value) == 0) continue;
    sum += value * multiplicity(idx) * x[idx[0]] * x[idx[1]] * x[idx[2]] * x[idx[3]];
  }
  return sum;
}

RationalVector evaluate_gradient(const SymmetricTensor4& t, std::span<const Rational> x) {
  require_dim(t, x.size(), "evaluate_gradient");
  // (T x^3)_m = (1/4) d/dx_m of the form.
  RationalVector grad(x.size(), Rational(0));
  for (const auto& [idx, value] : t.entries()) {
    if (sgn(value) == 0) continue;
    Rational w = value * multiplicity(idx);
    for (int p = 0; p < 4; ++p) {
      Rational rest = w;
      for (int q = 0; q < 4; ++q) {
        if (q != p) rest *= x[idx[q]];
      }
      grad[idx[p]] += rest;
    }
  }
  for (auto& g : grad) g /= 4;
  return grad;
}

Rational evaluate_mixed(const SymmetricTensor4& t, std::span<const Rational> x, int k,
                        std::span<const Rational> y) {
  if (k < 0 || k > 4) throw std::invalid_argument("evaluate_mixed: k must be in [0, 4]");
  require_dim(t, x.size(), "evaluate_mixed");
  require_dim(t, y.size(), "evaluate_mixed");
  const int n = t.dim();
  Rational sum = 0;
  Index4 idx{};
  for (int i = 0; i < n; ++i) {
    idx[0] = static_cast<std::uint8_t>(i);
    for (int j = 0; j < n; ++j) {
      idx[1] = static_cast<std::uint8_t>(j);
      for (int a = 0; a < n; ++a) {
        idx[2] = static_cast<std::uint8_t>(a);
        for (int b = 0; b < n; ++b) {
          idx[3] = static_cast<std::uint8_t>(b);
          const Rational& v = t.at(idx);
          if (sgn(v) == 0) continue;
          Rational term = v;
          for (int p = 0; p < 4; ++p) term *= (p < k ? x[idx[p]] : y[idx[p]]);
          sum += term;
        }
      }
    }
  }
  return sum;
}

Rational inner_product(const SymmetricTensor4& t, const SymmetricTensor4& a) {
  if (t.dim() != a.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  Rational sum = 0;
  for (const auto& [idx, value] : t.entries()) sum += value * a.at(idx) * multiplicity(idx);
  return sum;
}

Rational inner_product(const SymmetricTensor4& t, const RankOneTensor4& a) {
  return evaluate_form(t, a.generator);
}

Rational frobenius_norm_squared(const SymmetricTensor4& t) {
  return inner_product(t, t);
}

double frobenius_norm(const SymmetricTensor4& t) {
  if (auto root = exact_sqrt(frobenius_norm_squared(t))) return root->get_d();
  return std::sqrt(frobenius_norm_squared(t).get_d());
}

Symmetrized symmetrize(int dim, std::span<const Rational> raw) {
  const std::size_t n = static_cast<std::size_t>(dim);
  if (dim < 1 || raw.size() != n * n * n * n) {
    throw std::invalid_argument("symmetrize: expected dim^4 raw entries");
  }
  auto flat = [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * n + j) * n + k) * n + l;
  };

  std::map<Index4, Rational> sums;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Index4 key = canonical({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                                  static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(l)});
          sums[key] += raw[flat(i, j, k, l)];
        }

  std::vector<std::pair<Index4, Rational>> values;
  for (auto& [key, sum] : sums) values.emplace_back(key, sum / multiplicity(key));
  SymmetricTensor4 tensor(dim, values);

  Rational worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Index4 idx{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                     static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(l)};
          Rational dev = abs(raw[flat(i, j, k, l)] - tensor.at(idx));
          if (dev > worst) worst = dev;
        }
  return {std::move(tensor), worst};
}

SymmetricTensor4 tensor_from_monomials(int dim, std::span<const Monomial> monomials) {
  std::map<Index4, Rational> acc;
  for (const auto& m : monomials) {
    for (auto c : m.index) {
      if (c >= dim) throw std::invalid_argument("monomial index out of range");
    }
    Index4 key = canonical(m.index);
    acc[key] += m.coefficient / multiplicity(key);
  }
  std::vector<std::pair<Index4, Rational>> values(acc.begin(), acc.end());
  return SymmetricTensor4(dim, values);
}

FloatForm::FloatForm(const SymmetricTensor4& t) : dim_(t.dim()) {
  for (const auto& [idx, value] : t.entries()) {
    if (sgn(value) == 0) continue;
    double w = value.get_d() * multiplicity(idx);
    terms_.push_back({w, idx});
    scale_ += std::abs(w);
  }
}

double FloatForm::value(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& term : terms_) {
    sum += term.weight * x[term.index[0]] * x[term.index[1]] * x[term.index[2]] * x[term.index[3]];
  }
  return sum;
}

void FloatForm::gradient(std::span<const double> x, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  for (const auto& term : terms_) {
    const double a = x[term.index[0]], b = x[term.index[1]], c = x[term.index[2]],
                 d = x[term.index[3]];
    const double w = 0.25 * term.weight;
    out[term.index[0]] += w * b * c * d;
    out[term.index[1]] += w * a * c * d;
    out[term.index[2]] += w * a * b * d;
    out[term.index[3]] += w * a * b * c;
  }
}

double evaluate_form(const FloatForm& form, std::span<const double> x) {
  if (static_cast<int>(x.size()) != form.dim()) {
    throw std::invalid_argument("evaluate_form: vector length does not match tensor dimension");
  }
  return form.value(x);
}

}  // namespace qpd
