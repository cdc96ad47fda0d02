#pragma once

#include "quartic_pd/rational.hpp"
#include "quartic_pd/tensor.hpp"
#include "quartic_pd/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace qpd {

struct OracleConfig {
  /// Candidate count; 0 selects 4096 for n = 2 and 20000 for n = 3.
  int grid_points = 0;
  int refine_max_iters = 500;
  /// Stop when the tangential gradient norm drops below grad_tol * max(1, scale).
  double grad_tol = 1e-10;
  /// Half-width of the band around zero reported as Boundary.
  double classify_margin = 1e-8;
  std::uint64_t seed = 0;
  /// Number of well-separated low candidates refined by descent.
  int refine_seeds = 32;
  /// Zero-set points closer than this are merged.
  double cluster_radius = 1e-4;

  int effective_grid_points(int dim) const;
  /// Throws std::invalid_argument on non-positive fields or margin >= 1.
  void validate() const;
};

enum class OracleClass { PdCertified, Indefinite, Boundary };

std::string_view to_string(OracleClass c);

struct OracleResult {
  double min_value = 0.0;
  /// Unit norm, first nonzero coordinate positive.
  FloatVector minimizer;
  OracleClass classification = OracleClass::Boundary;
  /// Descent iterations spent on the winning candidate.
  int iterations_used = 0;
  /// A sample point with value above the margin, when one exists.
  std::optional<FloatVector> positivity_witness;
};

/// Minimizes T x^4 over the unit sphere: lattice sampling with seeded jitter,
/// then projected-gradient descent from the best well-separated candidates.
/// Deterministic for a fixed config. Supports dim 1..3; throws
/// std::invalid_argument otherwise.
OracleResult sphere_minimize(const SymmetricTensor4& t, const OracleConfig& cfg = {});

/// Margin classification of the sphere minimum. An Indefinite verdict carries
/// a rational witness (minimizer rounded to denominator 1e6) whose exact form
/// value is negative; if the rounding fails that check the result is
/// Undetermined instead.
Verdict classify_numeric(const SymmetricTensor4& t, const OracleConfig& cfg = {});

struct ZeroSet {
  /// Cluster representatives on the unit sphere (antipodes kept distinct).
  std::vector<FloatVector> points;
  /// The form vanishes (within the margin) on every sample point.
  bool degenerate = false;
};

ZeroSet zero_set_probe(const SymmetricTensor4& t, const OracleConfig& cfg = {});

/// The lattice used for candidate generation (exposed for tests).
std::vector<FloatVector> sphere_candidates(int dim, int count, std::uint64_t seed);

namespace rules {
inline constexpr const char* kOracleSphereMinimum = "oracle-sphere-minimum";
}

}  // namespace qpd
