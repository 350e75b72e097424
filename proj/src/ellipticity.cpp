#include "sullivan/ellipticity.hpp"

#include <algorithm>

#include "sullivan/cohomology.hpp"

namespace sullivan {

int formal_dimension_bound(const Model& model) {
  int n = 0;
  for (const auto& g : model.space->generators()) n += g.odd() ? g.degree : -(g.degree - 1);
  return n;
}

namespace {

int max_even_degree(const Model& model) {
  int m = 0;
  for (const auto& g : model.space->generators())
    if (!g.odd()) m = std::max(m, g.degree);
  return m;
}

// Monomials of Lambda(V^even) in the given degree, as indices into basis(degree).
std::vector<int> even_monomials(const Space& space, int degree) {
  std::vector<int> out;
  const auto& b = space.basis(degree);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (space.odd_length(b.monomials[i]) == 0) out.push_back(static_cast<int>(i));
  return out;
}

int quotient_dim_in_degree(const Model& model, int degree) {
  const auto& space = *model.space;
  const auto& target = space.basis(degree);
  const auto evens = even_monomials(space, degree);
  if (evens.empty()) return 0;
  Echelon ideal(static_cast<int>(target.size()));
  for (std::size_t j = 0; j < space.size(); ++j) {
    if (!space.generator(j).odd()) continue;
    const auto& rel = model.differential.value(j);
    if (rel.is_zero()) continue;
    const int mult_degree = degree - (space.generator(j).degree + 1);
    if (mult_degree < 0) continue;
    for (int idx : even_monomials(space, mult_degree)) {
      const auto& m = space.basis(mult_degree).monomials[static_cast<std::size_t>(idx)];
      ideal.insert(coordinates(Polynomial::term(model.space, m) * rel, target));
    }
  }
  return static_cast<int>(evens.size()) - ideal.rank();
}

}  // namespace

std::vector<int> pure_quotient_dims(const Model& model, int max_degree) {
  if (!is_pure(model)) throw std::invalid_argument("pure_quotient_dims: model is not pure");
  std::vector<int> dims;
  for (int n = 0; n <= max_degree; ++n) dims.push_back(quotient_dim_in_degree(model, n));
  return dims;
}

EllipticityVerdict is_elliptic_pure(const Model& model) {
  if (!is_pure(model)) throw std::invalid_argument("is_elliptic_pure: model '" + model.name + "' is not pure");
  EllipticityVerdict v;
  const int bound = formal_dimension_bound(model);
  const int width = max_even_degree(model);
  if (width == 0) {
    v.elliptic = true;
    v.formal_dimension = bound;
    v.witness = "no even generators: Q = Q";
    return v;
  }
  const int start = std::max(bound + 1, 1);
  for (int n = start; n < start + width; ++n) {
    const int q = quotient_dim_in_degree(model, n);
    if (q != 0) {
      v.elliptic = false;
      v.witness = "Q is nonzero in degree " + std::to_string(n) + " > formal dimension bound " +
                  std::to_string(bound);
      return v;
    }
  }
  v.elliptic = true;
  v.formal_dimension = bound;
  v.witness = "Q vanishes on degrees " + std::to_string(start) + ".." + std::to_string(start + width - 1);
  return v;
}

EllipticityVerdict is_elliptic(const Model& model) {
  EllipticityVerdict v = is_elliptic_pure(pure(model));
  if (!v.elliptic) return v;
  const int n = *v.formal_dimension;
  if (n < 0) throw InconsistencyError("elliptic verdict with negative formal dimension");
  const int reach = n + model.max_generator_degree();
  const BettiTable b = betti(model, reach);
  if (b.at(n) != 1)
    throw InconsistencyError(model.name + ": dim H^" + std::to_string(n) + " = " +
                             std::to_string(b.at(n)) + ", expected 1");
  for (int i = n + 1; i <= reach; ++i)
    if (b.at(i) != 0)
      throw InconsistencyError(model.name + ": cohomology in degree " + std::to_string(i) +
                               " above the formal dimension");
  return v;
}

}  // namespace sullivan
