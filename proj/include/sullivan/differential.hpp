#pragma once

// Degree +1 derivations of free graded-commutative algebras and minimal
// Sullivan models (LambdaV, d).

#include <optional>
#include <string>
#include <vector>

#include "sullivan/algebra.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

/// A degree +1 derivation, determined by its values on generators. On a
/// divided-power generator w it acts by D(gamma^p w) = D(w) gamma^{p-1}(w).
class Derivation {
 public:
  Derivation() = default;
  Derivation(SpacePtr space, std::vector<Polynomial> values);

  static Derivation zero(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const Polynomial& value(std::size_t generator) const { return values_[generator]; }
  const std::vector<Polynomial>& values() const { return values_; }
  bool is_zero() const;

  Polynomial apply(const Monomial& m) const;
  Polynomial apply(const Polynomial& p) const;

  bool operator==(const Derivation& other) const;

 private:
  SpacePtr space_;
  std::vector<Polynomial> values_;
};

/// Matrix of the derivation from basis(degree) to basis(degree + 1).
SparseMatrix derivation_matrix(const Derivation& d, int degree);

/// Coordinates of a homogeneous polynomial in basis(degree).
SparseVector coordinates(const Polynomial& p, const DegreeBasis& basis);
Polynomial from_coordinates(const SpacePtr& space, const DegreeBasis& basis, const SparseVector& v);

/// A finite minimal Sullivan algebra (LambdaV, d).
struct Model {
  std::string name;
  SpacePtr space;
  Derivation differential;

  /// Same generators, different differential.
  Model with_differential(Derivation d, std::string suffix = {}) const;

  int odd_count() const;
  int even_count() const;
  int max_generator_degree() const;
};

/// Builds a model over LambdaV with generators (name, degree) and
/// differential assignments parsed from polynomial text; unassigned
/// generators get d = 0. Throws ParseError / std::invalid_argument.
Model make_model(std::string name, const std::vector<std::pair<std::string, int>>& generators,
                 const std::vector<std::pair<std::string, std::string>>& differential);

struct Violation {
  enum class Kind { degree, homogeneity, minimality, square };
  Kind kind;
  std::string generator;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

const char* to_string(Violation::Kind kind);

ValidationReport validate(const Model& model);

/// k = minimum word length over all terms of all d(g); nullopt when d = 0.
std::optional<int> lowest_wordlength(const Derivation& d);
std::optional<int> lowest_wordlength(const Model& model);

/// g -> word-length-i component of d(g).
Derivation part(const Derivation& d, int i);
Derivation part(const Model& model, int i);

/// True when every value is word-length homogeneous of one common length.
bool is_wordlength_homogeneous(const Derivation& d);

bool is_pure(const Model& model);

/// The associated pure model: d_sigma(even) = 0, d_sigma(odd y) = component of
/// dy in Lambda(V^even). Throws std::logic_error if d_sigma fails to square to 0.
Model pure(const Model& model);

/// pure(part(k)) == part(pure(model), k) with k the model's lowest word length.
bool commuting_check(const Model& model);

}  // namespace sullivan
