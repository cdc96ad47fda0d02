#include "quartic_pd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qpd {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void normalize(FloatVector& x) {
  const double n = std::sqrt(dot(x, x));
  if (n > 0.0) {
    for (double& v : x) v /= n;
  }
}

double distance(const FloatVector& a, const FloatVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

void canonicalize_sign(FloatVector& x) {
  for (double v : x) {
    if (std::abs(v) > 1e-14) {
      if (v < 0) {
        for (double& w : x) w = -w;
      }
      return;
    }
  }
}

// Portable uniform [0, 1): the std distributions are implementation-defined.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Refined {
  FloatVector point;
  double value;
  int iterations;
};

Refined refine(const FloatForm& form, FloatVector x, const OracleConfig& cfg) {
  const int n = form.dim();
  const double scale = std::max(1.0, form.scale());
  const double tol = cfg.grad_tol * scale;
  normalize(x);
  double fx = form.value(x);
  double step = 0.25 / scale;
  FloatVector grad(n), trial(n);
  int it = 0;
  for (; it < cfg.refine_max_iters; ++it) {
    form.gradient(x, grad);
    // Euclidean gradient is 4 T x^3; drop the radial part.
    const double radial = dot(grad, x);
    double gnorm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      grad[i] = 4.0 * (grad[i] - radial * x[i]);
      gnorm2 += grad[i] * grad[i];
    }
    if (std::sqrt(gnorm2) <= tol) break;

    bool moved = false;
    for (int halving = 0; halving < 80; ++halving) {
      for (int i = 0; i < n; ++i) trial[i] = x[i] - step * grad[i];
      normalize(trial);
      const double ft = form.value(trial);
      if (ft < fx) {
        x.swap(trial);
        fx = ft;
        step = std::min(step * 2.0, 1e3 / scale);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return {std::move(x), fx, it};
}

// Lowest candidates, greedily thinned so that picks are at least `separation` apart.
std::vector<std::size_t> pick_seeds(const std::vector<FloatVector>& points,
                                    const std::vector<double>& values, int dim, int limit,
                                    double separation) {
  std::vector<std::size_t> order;
  const std::size_t count = points.size();
  if (dim == 2) {
    // Local minima of the cyclic angle grid.
    for (std::size_t i = 0; i < count; ++i) {
      const double prev = values[(i + count - 1) % count];
      const double next = values[(i + 1) % count];
      if (values[i] <= prev && values[i] <= next) order.push_back(i);
    }
  } else {
    order.resize(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<std::size_t> seeds;
  for (std::size_t idx : order) {
    if (static_cast<int>(seeds.size()) >= limit) break;
    const bool far = std::all_of(seeds.begin(), seeds.end(), [&](std::size_t s) {
      return distance(points[s], points[idx]) >= separation;
    });
    if (far) seeds.push_back(idx);
  }
  return seeds;
}

struct Search {
  std::vector<FloatVector> candidates;
  std::vector<double> values;
  std::vector<Refined> refined;
};

Search run_search(const SymmetricTensor4& t, const OracleConfig& cfg) {
  cfg.validate();
  const int dim = t.dim();
  if (dim < 1 || dim > 3) {
    throw std::invalid_argument("numeric oracle supports dimensions 1 to 3, got " +
                                std::to_string(dim));
  }
  const FloatForm form(t);
  Search s;
  const int count = cfg.effective_grid_points(dim);
  s.candidates = sphere_candidates(dim, count, cfg.seed);
  s.values.reserve(s.candidates.size());
  for (const auto& c : s.candidates) s.values.push_back(form.value(c));

  const double spacing = dim == 3 ? std::sqrt(4.0 * std::numbers::pi / count)
                                  : 2.0 * std::numbers::pi / count;
  const double separation = dim == 3 ? std::max(0.25, 3.0 * spacing) : 0.0;
  for (std::size_t idx : pick_seeds(s.candidates, s.values, dim, cfg.refine_seeds, separation)) {
    s.refined.push_back(refine(form, s.candidates[idx], cfg));
  }
  return s;
}

bool exact_negative(const SymmetricTensor4& t, const FloatVector& x, RationalVector& witness) {
  witness = rationalize(x);
  return sgn(evaluate_form(t, witness)) < 0;
}

}  // namespace

int OracleConfig::effective_grid_points(int dim) const {
  if (grid_points > 0) return grid_points;
  return dim == 3 ? 20000 : 4096;
}

void OracleConfig::validate() const {
  if (grid_points < 0 || refine_max_iters <= 0 || !(grad_tol > 0) || !(classify_margin > 0) ||
      refine_seeds <= 0 || !(cluster_radius > 0)) {
    throw std::invalid_argument("oracle config fields must be positive");
  }
  if (classify_margin >= 1.0) throw std::invalid_argument("classify_margin must be < 1");
}

std::string_view to_string(OracleClass c) {
  switch (c) {
    case OracleClass::PdCertified: return "pd-certified-numerically";
    case OracleClass::Indefinite: return "indefinite";
    case OracleClass::Boundary: return "boundary";
  }
  return "boundary";
}

std::vector<FloatVector> sphere_candidates(int dim, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FloatVector> out;
  if (dim == 1) {
    out.push_back({1.0});
    out.push_back({-1.0});
    return out;
  }
  out.reserve(static_cast<std::size_t>(count));
  if (dim == 2) {
    for (int i = 0; i < count; ++i) {
      const double jitter = 0.5 * (unit_uniform(rng) - 0.5);
      const double theta = 2.0 * std::numbers::pi * (i + 0.5 + jitter) / count;
      out.push_back({std::cos(theta), std::sin(theta)});
    }
    return out;
  }
  // Spherical Fibonacci lattice.
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double amplitude = 0.25 * std::sqrt(4.0 * std::numbers::pi / count);
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    FloatVector p{r * std::cos(phi), r * std::sin(phi), z};
    for (double& v : p) v += amplitude * (2.0 * unit_uniform(rng) - 1.0);
    normalize(p);
    out.push_back(std::move(p));
  }
  return out;
}

OracleResult sphere_minimize(const SymmetricTensor4& t, const OracleConfig& cfg) {
  Search s = run_search(t, cfg);
  const FloatForm form(t);

  OracleResult r;
  const Refined* best = nullptr;
  std::vector<FloatVector> canon;
  canon.reserve(s.refined.size());
  for (auto& cand : s.refined) {
    FloatVector p = cand.point;
    canonicalize_sign(p);
    canon.push_back(std::move(p));
  }
  std::size_t best_idx = 0;
  for (std::size_t i = 0; i < s.refined.size(); ++i) {
    const auto& cand = s.refined[i];
    if (!best || cand.value < best->value ||
        (cand.value == best->value && canon[i] < canon[best_idx])) {
      best = &cand;
      best_idx = i;
    }
  }
  r.minimizer = canon[best_idx];
  r.min_value = form.value(r.minimizer);
  r.iterations_used = best->iterations;

  const auto top = std::max_element(s.values.begin(), s.values.end());
  if (top != s.values.end() && *top > cfg.classify_margin) {
    r.positivity_witness = s.candidates[static_cast<std::size_t>(top - s.values.begin())];
  }

  if (r.min_value > cfg.classify_margin) {
    r.classification = OracleClass::PdCertified;
  } else if (r.min_value < -cfg.classify_margin) {
    RationalVector witness;
    r.classification = exact_negative(t, r.minimizer, witness) ? OracleClass::Indefinite
                                                               : OracleClass::Boundary;
  } else {
    r.classification = OracleClass::Boundary;
  }
  return r;
}

Verdict classify_numeric(const SymmetricTensor4& t, const OracleConfig& cfg) {
  const OracleResult r = sphere_minimize(t, cfg);
  Verdict v;
  v.rule = rules::kOracleSphereMinimum;
  v.margin = r.min_value;
  switch (r.classification) {
    case OracleClass::PdCertified:
      v.kind = Definiteness::PositiveDefinite;
      break;
    case OracleClass::Indefinite: {
      RationalVector witness;
      exact_negative(t, r.minimizer, witness);
      v.kind = Definiteness::Indefinite;
      v.witness = std::move(witness);
      break;
    }
    case OracleClass::Boundary:
      v.kind = Definiteness::Undetermined;
      break;
  }
  return v;
}

ZeroSet zero_set_probe(const SymmetricTensor4& t, const OracleConfig& cfg) {
  Search s = run_search(t, cfg);
  ZeroSet z;
  const bool all_small = std::all_of(s.values.begin(), s.values.end(), [&](double v) {
    return std::abs(v) <= cfg.classify_margin;
  });
  if (all_small) {
    z.degenerate = true;
    return z;
  }
  for (const auto& cand : s.refined) {
    if (std::abs(cand.value) > cfg.classify_margin) continue;
    const bool known = std::any_of(z.points.begin(), z.points.end(), [&](const FloatVector& p) {
      return distance(p, cand.point) < cfg.cluster_radius;
    });
    if (!known) z.points.push_back(cand.point);
  }
  std::sort(z.points.begin(), z.points.end());
  return z;
}

}  // namespace qpd
