#include "quartic_pd/verdict.hpp"

#include <cmath>

namespace qpd {

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::PositiveSemidefiniteNotDefinite: return "psd-not-pd";
    case Definiteness::PositiveSemidefinite: return "psd";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Undetermined: return "undetermined";
  }
  return "undetermined";
}

FloatVector unit_witness(const RationalVector& witness) {
  FloatVector out = to_float(witness);
  double norm = 0.0;
  for (double v : out) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& v : out) v /= norm;
  }
  return out;
}

}  // namespace qpd
