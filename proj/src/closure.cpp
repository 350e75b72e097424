#include "sullivan/closure.hpp"

#include <algorithm>

namespace sullivan {

const Polynomial& ClosureComplex::suspension_value(std::size_t i) const {
  return D_.value(generator_count() + i);
}

Polynomial ClosureComplex::correction(std::size_t i) const {
  return suspension_value(i) - Polynomial::term(total_, total_->generator_monomial(i));
}

Monomial ClosureComplex::embed_lambda(const Monomial& a) const {
  Monomial out = total_->unit();
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  return out;
}

Monomial ClosureComplex::embed_gamma(const Monomial& g) const {
  Monomial out = total_->unit();
  const std::size_t m = generator_count();
  for (std::size_t i = 0; i < g.size(); ++i) out[m + i] = g[i];
  return out;
}

Polynomial ClosureComplex::embed(const Polynomial& lambda_element) const {
  Polynomial out(total_);
  for (const auto& [a, c] : lambda_element.terms()) out.add_term(embed_lambda(a), c);
  return out;
}

std::pair<Monomial, Monomial> ClosureComplex::split(const Monomial& t) const {
  const std::size_t m = generator_count();
  Monomial a = model_.space->unit();
  Monomial g = gamma_->unit();
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = t[i];
    g[i] = t[m + i];
  }
  return {a, g};
}

namespace {

int phi_generator(const Generator& v) { return v.degree + (v.odd() ? 1 : 0); }

}  // namespace

int ClosureComplex::phi_lambda(const Monomial& a) const {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * phi_generator(model_.space->generator(i));
  return total;
}

int ClosureComplex::phi_gamma(const Monomial& g) const {
  int total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) total += g[i] * phi_generator(model_.space->generator(i));
  return total;
}

ClosureCheck verify_closure(const ClosureComplex& closure, int bound) {
  ClosureCheck check;
  check.checked_through = bound;
  const auto& D = closure.differential();
  std::vector<SparseMatrix> mats;
  for (int n = 0; n <= bound + 1; ++n) mats.push_back(derivation_matrix(D, n));
  for (int n = 0; n <= bound; ++n) {
    const auto& first = mats[static_cast<std::size_t>(n)];
    const auto& second = mats[static_cast<std::size_t>(n + 1)];
    for (int c = 0; c < first.cols() && check.d_squared_zero; ++c) {
      if (!second.multiply(first.column(c)).empty()) {
        check.d_squared_zero = false;
        check.failure = "D^2 != 0 on " + closure.total()->render(closure.total()->basis(n).monomials[static_cast<std::size_t>(c)]);
      }
    }
  }
  std::vector<int> ranks;
  for (int n = 0; n <= bound; ++n) ranks.push_back(rank(mats[static_cast<std::size_t>(n)]));
  for (int n = 0; n <= bound; ++n) {
    const int dim = static_cast<int>(closure.total()->basis(n).size());
    const int h = dim - ranks[static_cast<std::size_t>(n)] - (n > 0 ? ranks[static_cast<std::size_t>(n - 1)] : 0);
    check.homology_dims.push_back(h);
    if (h != (n == 0 ? 1 : 0) && check.acyclic) {
      check.acyclic = false;
      if (check.failure.empty()) check.failure = "closure homology is " + std::to_string(h) + " in degree " + std::to_string(n);
    }
  }
  return check;
}

ClosureComplex acyclic_closure(const Model& model, const Derivation& derivation, int bound,
                               ClosureConstraints constraints) {
  if (derivation.space() != model.space) throw std::invalid_argument("acyclic_closure: derivation over a different model");
  if (bound < model.max_generator_degree() + 1)
    throw std::invalid_argument("acyclic_closure: bound must be at least the largest generator degree + 1");

  const auto& gens = model.space->generators();
  const std::size_t m = gens.size();
  std::vector<Generator> total_gens(gens.begin(), gens.end());
  std::vector<Generator> gamma_gens;
  for (const auto& v : gens) {
    const int d = v.degree - 1;
    gamma_gens.push_back({"s" + v.name, d, d % 2 != 0 ? GeneratorKind::exterior : GeneratorKind::divided_power});
  }
  total_gens.insert(total_gens.end(), gamma_gens.begin(), gamma_gens.end());

  ClosureComplex cc;
  cc.model_ = model;
  cc.base_ = derivation;
  cc.constraints_ = constraints;
  cc.total_ = Space::create(std::move(total_gens), Space::Order::as_given);
  cc.gamma_ = Space::create(std::move(gamma_gens), Space::Order::as_given);

  std::vector<Polynomial> values(2 * m, Polynomial(cc.total_));
  for (std::size_t i = 0; i < m; ++i) values[i] = cc.embed(derivation.value(i));
  cc.D_ = Derivation(cc.total_, values);

  for (std::size_t i = 0; i < m; ++i) {
    const int t = gens[i].degree;
    Polynomial value = Polynomial::term(cc.total_, cc.total_->generator_monomial(i));
    const Polynomial target = -cc.embed(derivation.value(i));
    if (!target.is_zero()) {
      const auto& src = cc.total_->basis(t);
      const auto& dst = cc.total_->basis(t + 1);
      const int phi_v = phi_generator(gens[i]);
      std::vector<const Monomial*> candidates;
      for (const auto& mono : src.monomials) {
        auto [a, g] = cc.split(mono);
        const int gamma_len = g.length();
        if (gamma_len == 0 || a.length() == 0) continue;
        bool uses_later = false;
        for (std::size_t j = i; j < m; ++j) uses_later |= g[j] != 0;
        if (uses_later) continue;
        if (constraints.weight_k && a.length() - (*constraints.weight_k - 2) * gamma_len < 1) continue;
        if (constraints.odd_filtered && cc.phi_lambda(a) + cc.phi_gamma(g) < phi_v) continue;
        candidates.push_back(&mono);
      }
      SparseMatrix sys(static_cast<int>(dst.size()), static_cast<int>(candidates.size()));
      for (std::size_t j = 0; j < candidates.size(); ++j)
        sys.set_column(static_cast<int>(j), coordinates(cc.D_.apply(*candidates[j]), dst));
      auto sol = solve(sys, coordinates(target, dst));
      if (!sol) {
        // Tell a too-strict constraint set apart from a broken partial closure.
        const auto partial = verify_closure(cc, t);
        throw std::runtime_error("acyclic_closure: no correction for s" + gens[i].name +
                                 (partial.ok() ? " satisfying the filtration constraints"
                                               : " (partial closure invalid: " + partial.failure + ")"));
      }
      for (const auto& [j, q] : *sol) value.add_term(*candidates[static_cast<std::size_t>(j)], q);
    }
    values[m + i] = value;
    cc.D_ = Derivation(cc.total_, values);
  }

  const auto check = verify_closure(cc, bound);
  if (!check.ok()) throw std::runtime_error("acyclic_closure: " + check.failure + " (increase truncation or report a bug)");
  return cc;
}

}  // namespace sullivan
