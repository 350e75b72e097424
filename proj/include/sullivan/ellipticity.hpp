#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sullivan/differential.hpp"

namespace sullivan {

struct EllipticityVerdict {
  bool elliptic = false;
  /// Top cohomology degree; set only when elliptic.
  std::optional<int> formal_dimension;
  std::string witness;
};

/// Raised when a consequence of ellipticity fails on a model the pure
/// criterion declared elliptic.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sum of odd generator degrees minus sum of (even degree - 1).
int formal_dimension_bound(const Model& model);

/// dim of Q = Sym(V^even) / (d y_j) in degrees 0..max_degree (pure input).
std::vector<int> pure_quotient_dims(const Model& model, int max_degree);

/// Decides finiteness of Q on the window of length max-even-degree placed
/// right after formal_dimension_bound. Throws std::invalid_argument on non-pure input.
EllipticityVerdict is_elliptic_pure(const Model& model);

/// Verdict of the associated pure model, cross-checked when elliptic: the
/// top cohomology is one-dimensional in degree N and vanishes above it.
EllipticityVerdict is_elliptic(const Model& model);

}  // namespace sullivan
