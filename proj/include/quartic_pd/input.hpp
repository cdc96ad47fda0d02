#pragma once

#include "quartic_pd/binary.hpp"
#include "quartic_pd/cyclic.hpp"
#include "quartic_pd/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qpd {

/// Malformed input; `field` names the offending part of the document.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class InputKind { Tensor, Binary, Cyclic, Relaxed };

std::string_view to_string(InputKind kind);

struct ParsedInput {
  InputKind kind = InputKind::Tensor;
  SymmetricTensor4 tensor;
  /// Nonzero only for raw (unsymmetrized) tensor documents.
  Rational max_asymmetry;
  std::optional<BinaryQuartic> binary;
  std::optional<CyclicTernary> cyclic;
  std::optional<RelaxedCyclicTernary> relaxed;
};

/// Accepts
///   - a JSON tensor document:
///       {"dim": 3, "entries": [{"index": [1,1,2,3], "value": "-7/12"}, ...]}
///     with 1-based indices in any order; "raw": true treats indices as raw
///     positions of an n^4 array (unlisted = 0) and symmetrizes;
///   - JSON shorthand {"binary": [...5]}, {"cyclic": [...5]}, {"relaxed": [...7]};
///   - text shorthand "binary a0 a1 a2 a3 a4", "cyclic a b c d e",
///     "relaxed a b c d e123 e223 e233".
/// Numbers may be integers, "p/q" or decimal strings. Throws InputError.
ParsedInput parse_input(std::string_view text);

/// Reads `path` ("-" for stdin) and parses it.
ParsedInput load_input(const std::string& path);

/// Canonical entry listing, e.g. "dim=2;1111=1;1112=0;...".
std::string canonical_text(const SymmetricTensor4& t);

/// FNV-1a 64-bit hash of canonical_text, as 16 hex digits.
std::string digest(const SymmetricTensor4& t);

}  // namespace qpd
