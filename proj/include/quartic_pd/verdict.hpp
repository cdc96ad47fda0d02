#pragma once

#include "quartic_pd/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qpd {

enum class Definiteness {
  PositiveDefinite,
  PositiveSemidefiniteNotDefinite,
  /// PSD established, strictness not decided.
  PositiveSemidefinite,
  Indefinite,
  Undetermined,
};

std::string_view to_string(Definiteness d);

/// Classification plus provenance: `rule` names the criterion that fired.
struct Verdict {
  Definiteness kind = Definiteness::Undetermined;
  std::string rule;
  /// Exact certificate: negative form value (Indefinite) or a zero of the
  /// form (PSD boundary). Not normalized.
  std::optional<RationalVector> witness;
  /// Sphere minimum, when the verdict came from the numeric oracle.
  std::optional<double> margin;

  bool is_psd() const {
    return kind == Definiteness::PositiveDefinite ||
           kind == Definiteness::PositiveSemidefiniteNotDefinite ||
           kind == Definiteness::PositiveSemidefinite;
  }
  bool decided() const { return kind != Definiteness::Undetermined; }
};

/// The cyclic-family classifiers return the same shape.
using FamilyVerdict = Verdict;

/// Unit-norm copy of a witness, for display.
FloatVector unit_witness(const RationalVector& witness);

}  // namespace qpd
