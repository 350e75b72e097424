#pragma once

// The acyclic closure (LambdaV (x) Gamma(sV), D) of a Sullivan algebra.
//
// The total space lists the generators of V (in model order) followed by the
// suspensions sv, |sv| = |v| - 1; odd sv are exterior, even sv carry divided
// powers. A monomial a (x) g of the total space is stored as one exponent
// vector whose first half is a and second half is g.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sullivan/differential.hpp"

namespace sullivan {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extra conditions imposed on the corrections c(sv) = D(sv) - v.
struct ClosureConstraints {
  /// Require wl(a) - (k-2) * Gamma-length(g) >= 1 on every term a (x) g, so D
  /// raises the weighted word-length filtration by at least k - 1.
  std::optional<int> weight_k;
  /// Require phi(term) >= phi(v), phi = degree + number of odd factors with
  /// phi(sv) := phi(v), so D never lowers the odd filtration.
  bool odd_filtered = false;
};

struct ClosureCheck {
  bool d_squared_zero = true;
  bool acyclic = true;
  int checked_through = 0;
  std::vector<int> homology_dims;  // H^n of the closure, n = 0..checked_through
  std::string failure;
  bool ok() const { return d_squared_zero && acyclic; }
};

class ClosureComplex {
 public:
  const Model& model() const { return model_; }
  const Derivation& base() const { return base_; }
  const SpacePtr& total() const { return total_; }
  const SpacePtr& gamma() const { return gamma_; }
  const Derivation& differential() const { return D_; }
  std::size_t generator_count() const { return model_.space->size(); }
  const ClosureConstraints& constraints() const { return constraints_; }

  /// D(sv_i) and the correction D(sv_i) - v_i.
  const Polynomial& suspension_value(std::size_t i) const;
  Polynomial correction(std::size_t i) const;

  Monomial embed_lambda(const Monomial& a) const;
  Monomial embed_gamma(const Monomial& g) const;
  Polynomial embed(const Polynomial& lambda_element) const;
  /// (LambdaV part, Gamma part) of a total monomial.
  std::pair<Monomial, Monomial> split(const Monomial& total) const;

  /// phi of a Lambda monomial or a Gamma word (odd filtration weight).
  int phi_lambda(const Monomial& a) const;
  int phi_gamma(const Monomial& g) const;

 private:
  friend ClosureComplex acyclic_closure(const Model&, const Derivation&, int, ClosureConstraints);

  Model model_;
  Derivation base_;
  SpacePtr total_;
  SpacePtr gamma_;
  Derivation D_;
  ClosureConstraints constraints_;
};

/// Builds the closure generator by generator, solving D(c) = -delta(v) for
/// the correction inside the already-built part, then verifies D^2 = 0 and
/// acyclicity through total degree bound (std::runtime_error when either fails).
ClosureComplex acyclic_closure(const Model& model, const Derivation& derivation, int bound,
                               ClosureConstraints constraints = {});

/// D^2 = 0 and H = Q (degree 0 only) through the given degree.
ClosureCheck verify_closure(const ClosureComplex& closure, int bound);

}  // namespace sullivan
