#include "sullivan/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "sullivan/ellipticity.hpp"

namespace sullivan {

int BettiTable::top_degree() const {
  for (int n = n_max; n >= 0; --n)
    if (dims[static_cast<std::size_t>(n)] != 0) return n;
  return -1;
}

DegreeCohomology cohomology_in_degree(const Derivation& derivation, int degree) {
  DegreeCohomology out;
  out.degree = degree;
  out.cocycles = kernel(derivation_matrix(derivation, degree));
  if (degree >= 1)
    out.coboundaries = image(derivation_matrix(derivation, degree - 1));
  else
    out.coboundaries = Subspace(out.cocycles.ambient());
  return out;
}

BettiTable betti(const Model& model, const Derivation& derivation, int n_max) {
  if (derivation.space() != model.space) throw std::invalid_argument("betti: derivation over a different model");
  BettiTable t;
  t.n_max = n_max;
  // rank of delta out of each degree; dims[n] = dim - rank_out(n) - rank_out(n-1)
  std::vector<int> rank_out(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) rank_out[static_cast<std::size_t>(n)] = rank(derivation_matrix(derivation, n));
  for (int n = 0; n <= n_max; ++n) {
    const int dim = static_cast<int>(model.space->basis(n).size());
    const int in = n == 0 ? 0 : rank_out[static_cast<std::size_t>(n - 1)];
    t.dims.push_back(dim - rank_out[static_cast<std::size_t>(n)] - in);
  }
  return t;
}

BettiTable betti(const Model& model, int n_max) { return betti(model, model.differential, n_max); }

int grading_level(const Space& space, const Monomial& m, Grading grading) {
  switch (grading) {
    case Grading::word_length: return m.length();
    case Grading::odd_weight: return space.degree(m) + space.odd_length(m);
  }
  return 0;
}

Bigraded bigraded_betti(const Model& model, const Derivation& derivation, int lo, int hi,
                        Grading grading) {
  const auto& space = *model.space;
  // Check homogeneity on generators: every term of delta(g) shifts the level by one amount.
  std::optional<int> shift;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const int base = grading_level(space, space.generator_monomial(i), grading);
    for (const auto& [m, c] : derivation.value(i).terms()) {
      const int s = grading_level(space, m, grading) - base;
      if (shift && *shift != s)
        throw std::invalid_argument("bigraded_betti: derivation is not homogeneous for this grading");
      shift = s;
    }
  }
  if (grading == Grading::odd_weight && shift && *shift != 0)
    throw std::invalid_argument("bigraded_betti: odd grading needs a pure differential");

  Bigraded out;
  auto levels_of = [&](int degree) {
    std::map<int, std::vector<int>> by_level;
    const auto& b = space.basis(degree);
    for (std::size_t i = 0; i < b.size(); ++i)
      by_level[grading_level(space, b.monomials[i], grading)].push_back(static_cast<int>(i));
    return by_level;
  };
  for (int n = std::max(lo, 0); n <= hi; ++n) {
    const SparseMatrix out_n = derivation_matrix(derivation, n);
    std::vector<int> all_rows(static_cast<std::size_t>(out_n.rows()));
    std::iota(all_rows.begin(), all_rows.end(), 0);
    const auto here = levels_of(n);
    std::map<int, int> incoming;  // level in degree n -> rank of image landing there
    if (n >= 1) {
      const SparseMatrix in = derivation_matrix(derivation, n - 1);
      std::vector<int> in_rows(static_cast<std::size_t>(in.rows()));
      std::iota(in_rows.begin(), in_rows.end(), 0);
      for (const auto& [p, cols] : levels_of(n - 1))
        incoming[p + shift.value_or(0)] += rank(in.select(in_rows, cols));
    }
    for (const auto& [p, cols] : here) {
      const int z = static_cast<int>(cols.size()) - rank(out_n.select(all_rows, cols));
      const int h = z - (incoming.count(p) ? incoming[p] : 0);
      if (h != 0) out[{p, n - p}] = h;
    }
  }
  return out;
}

CohomologyClass make_class(const Derivation& derivation, const Polynomial& p) {
  CohomologyClass c;
  c.representative = p.is_zero() ? Polynomial(derivation.space()) : p;
  if (p.is_zero()) return c;
  auto deg = p.degree();
  if (!deg) throw std::invalid_argument("make_class: representative is not homogeneous");
  c.degree = *deg;
  if (!derivation.apply(p).is_zero()) throw std::invalid_argument("make_class: representative is not a cocycle");
  const auto& b = derivation.space()->basis(*deg);
  if (*deg == 0) {
    c.nonzero = true;
    return c;
  }
  const Subspace bounds = image(derivation_matrix(derivation, *deg - 1));
  c.nonzero = !bounds.contains(coordinates(p, b));
  return c;
}

CohomologyClass fundamental_class(const Model& model) {
  const auto verdict = is_elliptic(model);
  if (!verdict.elliptic) throw std::invalid_argument("fundamental_class: model '" + model.name + "' is not elliptic");
  const int n = *verdict.formal_dimension;
  const auto h = cohomology_in_degree(model.differential, n);
  if (h.dim() != 1)
    throw std::logic_error("fundamental_class: dim H^" + std::to_string(n) + " = " + std::to_string(h.dim()));
  const auto& b = model.space->basis(n);
  for (const auto& v : h.cocycles.basis()) {
    if (!h.coboundaries.contains(v)) {
      CohomologyClass c;
      c.degree = n;
      c.representative = from_coordinates(model.space, b, v);
      c.nonzero = true;
      return c;
    }
  }
  throw std::logic_error("fundamental_class: no cocycle outside the coboundaries");
}

namespace {

// Columns of basis(degree) sorted by decreasing word length (stable).
std::vector<int> columns_by_wordlength(const DegreeBasis& b) {
  std::vector<int> cols(b.size());
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(), [&](int x, int y) {
    return b.monomials[static_cast<std::size_t>(x)].length() > b.monomials[static_cast<std::size_t>(y)].length();
  });
  return cols;
}

// Largest j such that (cocycles in Lambda^{>=j}V) is not inside the coboundaries
// in this degree; nullopt when H^degree = 0.
std::optional<int> top_filtration_level(const Derivation& d, int degree) {
  const auto& b = d.space()->basis(degree);
  if (b.size() == 0) return std::nullopt;
  const auto cols = columns_by_wordlength(b);
  const SparseMatrix dm = derivation_matrix(d, degree);
  std::vector<int> rows(static_cast<std::size_t>(dm.rows()));
  std::iota(rows.begin(), rows.end(), 0);
  const SparseMatrix permuted = dm.select(rows, cols);
  Echelon bounds(static_cast<int>(b.size()));
  if (degree >= 1) {
    const SparseMatrix in = derivation_matrix(d, degree - 1);
    for (int c = 0; c < in.cols(); ++c) bounds.insert(in.column(c));
  }
  std::optional<int> best;
  for (const auto& [free, v] : kernel_by_free_column(permuted)) {
    SparseVector original;
    for (const auto& [i, q] : v) original.emplace_back(cols[static_cast<std::size_t>(i)], q);
    std::sort(original.begin(), original.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (bounds.contains(original)) continue;
    const int level = b.monomials[static_cast<std::size_t>(cols[static_cast<std::size_t>(free)])].length();
    if (!best || level > *best) best = level;
  }
  return best;
}

}  // namespace

ToomerReport toomer_report(const Model& model) {
  const auto omega = fundamental_class(model);
  const int n = omega.degree;
  const auto& space = model.space;
  const auto& bn = space->basis(n);
  const auto& bn_prev = space->basis(n - 1);
  const auto& bn_next = space->basis(n + 1);

  ToomerReport r;
  r.formal_dimension = n;
  for (const auto& m : bn.monomials) r.max_top_wordlength = std::max(r.max_top_wordlength, m.length());

  // Joint system per k: unknowns z (degree-n monomials of word length >= k)
  // and w (degree n-1); equations delta z = 0 and z + delta w = omega.
  const SparseMatrix d_top = derivation_matrix(model.differential, n);
  const SparseMatrix d_prev = n >= 1 ? derivation_matrix(model.differential, n - 1)
                                     : SparseMatrix(static_cast<int>(bn.size()), 0);
  const SparseVector omega_coords = coordinates(omega.representative, bn);
  const int rows_top = static_cast<int>(bn_next.size());
  for (int k = 0; k <= r.max_top_wordlength; ++k) {
    std::vector<int> zcols;
    for (std::size_t i = 0; i < bn.size(); ++i)
      if (bn.monomials[i].length() >= k) zcols.push_back(static_cast<int>(i));
    const int nz = static_cast<int>(zcols.size());
    SparseMatrix sys(rows_top + static_cast<int>(bn.size()), nz + static_cast<int>(bn_prev.size()));
    for (int j = 0; j < nz; ++j) {
      for (const auto& [row, q] : d_top.column(zcols[static_cast<std::size_t>(j)])) sys.add(row, j, q);
      sys.add(rows_top + zcols[static_cast<std::size_t>(j)], j, 1);
    }
    for (int j = 0; j < d_prev.cols(); ++j)
      for (const auto& [row, q] : d_prev.column(j)) sys.add(rows_top + row, nz + j, q);
    SparseVector rhs;
    for (const auto& [i, q] : omega_coords) rhs.emplace_back(rows_top + i, q);
    auto sol = solve(sys, rhs);
    if (!sol) break;
    r.fundamental_class_route = k;
    Polynomial z(space);
    for (const auto& [j, q] : *sol)
      if (j < nz) z.add_term(bn.monomials[static_cast<std::size_t>(zcols[static_cast<std::size_t>(j)])], q);
    r.representative = z;
  }

  int e0 = 0;
  for (int m = 0; m <= n; ++m)
    if (auto level = top_filtration_level(model.differential, m)) e0 = std::max(e0, *level);
  r.injectivity_route = e0;
  return r;
}

int toomer(const Model& model) { return toomer_report(model).fundamental_class_route; }

PoincareReport poincare_report(const BettiTable& b, int formal_dimension) {
  PoincareReport r;
  r.formal_dimension = formal_dimension;
  r.dims = b.dims;
  r.symmetric = formal_dimension >= 0 && formal_dimension <= b.n_max;
  if (r.symmetric)
    for (int i = 0; i <= formal_dimension; ++i)
      if (b.at(i) != b.at(formal_dimension - i)) r.symmetric = false;
  r.vanishes_above = true;
  for (int i = formal_dimension + 1; i <= b.n_max; ++i)
    if (b.at(i) != 0) r.vanishes_above = false;
  return r;
}

}  // namespace sullivan
