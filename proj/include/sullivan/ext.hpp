#pragma once

// Ext_{(LambdaV, delta)}(Q, LambdaV) computed from the cochain complex
// Hom_{LambdaV}(LambdaV (x) Gamma(sV), LambdaV) = prod_g LambdaV^{n + |g|},
// truncated to Gamma-words of degree at most G.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sullivan/closure.hpp"
#include "sullivan/cohomology.hpp"

namespace sullivan {

/// Filtrations of the Hom complex used for depth and spectral sequences.
enum class HomFiltration {
  /// wl(f(g)): plain word length of the values.
  wordlength,
  /// wl(f(g)) + (k - 2) * Gamma-length(g), k the lowest word length of delta.
  weighted,
  /// phi(f(g)) - phi(g), phi = degree + number of odd factors.
  odd,
};

const char* to_string(HomFiltration f);

/// A cochain: the values f(g) on Gamma-words g (absent words map to 0).
struct HomElement {
  int degree = 0;
  std::map<Monomial, Polynomial> values;
  bool is_zero() const;
};

struct HomBasisElement {
  int word;  // index into HomComplex::words()
  Monomial value;
};

class HomComplex {
 public:
  HomComplex(const ClosureComplex& closure, int gamma_bound);

  const ClosureComplex& closure() const { return *closure_; }
  int gamma_bound() const { return gamma_bound_; }
  /// Gamma-words of degree <= gamma_bound, sorted by degree. Word 0 is 1.
  const std::vector<Monomial>& words() const { return words_; }
  int word_degree(int word) const;

  /// Basis of Hom^n, grouped by word in words() order. For G <= G' the basis
  /// at G is a prefix of the basis at G'.
  const std::vector<HomBasisElement>& basis(int n) const;
  std::optional<int> index(int n, int word, const Monomial& value) const;

  /// Matrix of the differential Hom^n -> Hom^{n+1}.
  SparseMatrix differential(int n) const;

  int level(const HomBasisElement& e, HomFiltration f, int k) const;
  std::vector<int> levels(int n, HomFiltration f, int k) const;

  HomElement element(int n, const SparseVector& coords) const;
  SparseVector coordinates(const HomElement& f) const;

 private:
  struct Incoming {
    int word;        // g with D(1 (x) g) containing a (x) g'
    Monomial factor; // a
    Rational coefficient;
  };
  struct Layout {
    std::vector<HomBasisElement> elements;
    std::vector<int> offsets;  // per word
  };
  const Layout& layout(int n) const;

  const ClosureComplex* closure_;
  int gamma_bound_;
  std::vector<Monomial> words_;
  std::map<Monomial, int> word_index_;
  std::vector<std::vector<Incoming>> incoming_;  // per g'
  mutable std::map<int, Layout> layouts_;
};

/// Applies the Hom differential: (Df)(g) = delta(f(g)) + (-1)^{|f|+1} f(D(1 (x) g)).
/// Throws TruncationError when f is supported outside Gamma-degree <= gamma_bound.
HomElement hom_differential(const ClosureComplex& closure, const HomElement& f, int gamma_bound);

struct ExtOptions {
  /// Degrees center - window .. center + window are computed; the center
  /// defaults to the formal dimension bound of the model.
  std::optional<int> center;
  int window = 1;
  HomFiltration filtration = HomFiltration::weighted;
  /// Truncation schedule G_i = initial + i * step (0 selects defaults).
  int initial_gamma_bound = 0;
  int gamma_step = 0;
  int max_rounds = 5;
};

struct ExtClass {
  int degree = 0;
  int level = 0;  // filtration degree p
  HomElement representative;
  bool evaluation_nonzero = false;
};

struct ExtDegree {
  int degree = 0;
  int dim = 0;
  std::map<int, int> graded;  // p -> dim of the associated graded piece
  int evaluation_rank = 0;
  bool operator==(const ExtDegree&) const = default;
};

struct ExtResult {
  std::vector<ExtDegree> degrees;
  std::vector<ExtClass> classes;
  HomFiltration filtration = HomFiltration::weighted;
  int k = 2;
  bool stable = false;
  int gamma_bound = 0;
  int gamma_step = 0;
  std::vector<int> schedule;  // truncations tried
  std::string note;

  int dim() const;
  /// Smallest filtration level carrying a class.
  std::optional<int> depth() const;
};

/// Closure constraints that make the Hom filtration a filtration by subcomplexes.
ClosureConstraints constraints_for(HomFiltration f, int k);

/// Weight k used by the weighted filtration for this derivation.
int filtration_k(const Derivation& delta);

/// A class is counted when it lies in the image of H(Hom_{<=G'}) -> H(Hom_{<=G})
/// with G' = G + step; the answer is accepted once two consecutive G agree.
ExtResult ext(const Model& model, const Derivation& delta, ExtOptions options = {});

/// Filtration depth of the Ext classes; throws TruncationError if the
/// truncation schedule never stabilises.
int depth(const Model& model, const Derivation& delta, ExtOptions options = {});

/// ev(f) = f(1) as a cohomology class of (LambdaV, delta).
CohomologyClass evaluation(const Model& model, const Derivation& delta, const HomElement& f);

struct GorensteinReport {
  int dim = 0;
  std::optional<int> degree;
  std::optional<int> level;
  bool evaluation_nonzero = false;
  bool stable = false;
  bool ok() const { return stable && dim == 1; }
};

GorensteinReport gorenstein_check(const Model& model, const Derivation& delta, ExtOptions options = {});

}  // namespace sullivan
