#pragma once

// Degreewise cohomology of (LambdaV, delta), Poincare duality, the
// fundamental class and the Toomer invariant.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sullivan/differential.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

struct BettiTable {
  int n_max = 0;
  std::vector<int> dims;

  int at(int n) const { return n >= 0 && n <= n_max ? dims[static_cast<std::size_t>(n)] : 0; }
  /// Largest degree with nonzero cohomology in range.
  int top_degree() const;
};

BettiTable betti(const Model& model, const Derivation& derivation, int n_max);
BettiTable betti(const Model& model, int n_max);

/// Cocycles and coboundaries of one degree, in coordinates of basis(degree).
struct DegreeCohomology {
  int degree = 0;
  Subspace cocycles;
  Subspace coboundaries;
  int dim() const { return cocycles.dim() - coboundaries.dim(); }
};

DegreeCohomology cohomology_in_degree(const Derivation& derivation, int degree);

/// How a bigraded splitting of cohomology is indexed.
///  word_length: p = word length (derivation must be word-length homogeneous).
///  odd_weight:  p = degree + number of odd factors (derivation must lower
///               the number of odd factors by exactly one, as a pure d does).
enum class Grading { word_length, odd_weight };

using Bigraded = std::map<std::pair<int, int>, int>;  // (p, q) -> dim, q = degree - p

/// Cohomology dims split by (p, q) for total degrees lo..hi. Throws
/// std::invalid_argument if the derivation is not homogeneous for the grading.
Bigraded bigraded_betti(const Model& model, const Derivation& derivation, int lo, int hi,
                        Grading grading = Grading::word_length);

/// Filtration index of a monomial under a grading.
int grading_level(const Space& space, const Monomial& m, Grading grading);

struct CohomologyClass {
  int degree = 0;
  Polynomial representative;
  bool nonzero = false;
};

/// Nonzero-ness of [p] in H(LambdaV, delta); p must be a homogeneous cocycle.
CohomologyClass make_class(const Derivation& derivation, const Polynomial& p);

/// Top class of an elliptic model. Throws std::invalid_argument on
/// non-elliptic input and std::logic_error if dim H^N != 1.
CohomologyClass fundamental_class(const Model& model);

struct ToomerReport {
  int formal_dimension = 0;
  /// max{k : omega has a cocycle representative in Lambda^{>=k}V}.
  int fundamental_class_route = 0;
  /// least n with H(LambdaV) -> H(LambdaV / Lambda^{>n}V) injective in degrees <= N.
  int injectivity_route = 0;
  /// Largest word length of a degree-N monomial.
  int max_top_wordlength = 0;
  Polynomial representative;  // cocycle in Lambda^{>=e0}V representing omega
};

ToomerReport toomer_report(const Model& model);
/// e0 by the fundamental-class route.
int toomer(const Model& model);

struct PoincareReport {
  int formal_dimension = 0;
  bool symmetric = false;
  bool vanishes_above = false;
  std::vector<int> dims;
  bool ok() const { return symmetric && vanishes_above; }
};

PoincareReport poincare_report(const BettiTable& b, int formal_dimension);

}  // namespace sullivan
