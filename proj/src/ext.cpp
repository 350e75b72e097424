#include "sullivan/ext.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "sullivan/ellipticity.hpp"

namespace sullivan {

const char* to_string(HomFiltration f) {
  switch (f) {
    case HomFiltration::wordlength: return "wordlength";
    case HomFiltration::weighted: return "weighted";
    case HomFiltration::odd: return "odd";
  }
  return "?";
}

bool HomElement::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

HomComplex::HomComplex(const ClosureComplex& closure, int gamma_bound)
    : closure_(&closure), gamma_bound_(gamma_bound) {
  const auto& gamma = closure.gamma();
  for (int d = 0; d <= gamma_bound; ++d)
    for (const auto& g : gamma->basis(d).monomials) {
      word_index_.emplace(g, static_cast<int>(words_.size()));
      words_.push_back(g);
    }
  incoming_.resize(words_.size());
  const auto& D = closure.differential();
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const Polynomial image = D.apply(closure.embed_gamma(words_[w]));
    for (const auto& [t, c] : image.terms()) {
      auto [a, g] = closure.split(t);
      auto it = word_index_.find(g);
      if (it == word_index_.end()) throw std::logic_error("HomComplex: D raised the Gamma degree");
      incoming_[static_cast<std::size_t>(it->second)].push_back({static_cast<int>(w), a, c});
    }
  }
}

int HomComplex::word_degree(int word) const {
  return closure_->gamma()->degree(words_[static_cast<std::size_t>(word)]);
}

const HomComplex::Layout& HomComplex::layout(int n) const {
  auto it = layouts_.find(n);
  if (it != layouts_.end()) return it->second;
  Layout l;
  const auto& space = closure_->model().space;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    l.offsets.push_back(static_cast<int>(l.elements.size()));
    const int d = n + word_degree(static_cast<int>(w));
    if (d < 0) continue;
    for (const auto& m : space->basis(d).monomials) l.elements.push_back({static_cast<int>(w), m});
  }
  return layouts_.emplace(n, std::move(l)).first->second;
}

const std::vector<HomBasisElement>& HomComplex::basis(int n) const { return layout(n).elements; }

std::optional<int> HomComplex::index(int n, int word, const Monomial& value) const {
  const int d = n + word_degree(word);
  if (d < 0) return std::nullopt;
  auto pos = closure_->model().space->basis(d).find(value);
  if (!pos) return std::nullopt;
  return layout(n).offsets[static_cast<std::size_t>(word)] + *pos;
}

SparseMatrix HomComplex::differential(int n) const {
  const auto& src = basis(n);
  const auto& dst = basis(n + 1);
  const auto& space = *closure_->model().space;
  const auto& delta = closure_->base();
  SparseMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  const int outer = (n + 1) % 2 == 0 ? 1 : -1;
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto& e = src[j];
    const Polynomial image = delta.apply(e.value);
    for (const auto& [t, c] : image.terms())
      m.add(*index(n + 1, e.word, t), static_cast<int>(j), c);
    for (const auto& inc : incoming_[static_cast<std::size_t>(e.word)]) {
      auto [s, prod] = space.multiply(inc.factor, e.value);
      if (s == 0) continue;
      const int koszul = (n % 2 != 0 && space.degree(inc.factor) % 2 != 0) ? -1 : 1;
      m.add(*index(n + 1, inc.word, prod), static_cast<int>(j), Rational(s) * inc.coefficient * (outer * koszul));
    }
  }
  return m;
}

int HomComplex::level(const HomBasisElement& e, HomFiltration f, int k) const {
  const auto& g = words_[static_cast<std::size_t>(e.word)];
  switch (f) {
    case HomFiltration::wordlength: return e.value.length();
    case HomFiltration::weighted: return e.value.length() + (k - 2) * g.length();
    case HomFiltration::odd: return closure_->phi_lambda(e.value) - closure_->phi_gamma(g);
  }
  return 0;
}

std::vector<int> HomComplex::levels(int n, HomFiltration f, int k) const {
  std::vector<int> out;
  for (const auto& e : basis(n)) out.push_back(level(e, f, k));
  return out;
}

HomElement HomComplex::element(int n, const SparseVector& coords) const {
  HomElement f;
  f.degree = n;
  const auto& b = basis(n);
  const auto& space = closure_->model().space;
  for (const auto& [i, q] : coords) {
    const auto& e = b[static_cast<std::size_t>(i)];
    auto [it, fresh] = f.values.try_emplace(words_[static_cast<std::size_t>(e.word)], space);
    it->second.add_term(e.value, q);
  }
  return f;
}

SparseVector HomComplex::coordinates(const HomElement& f) const {
  SparseVector out;
  for (const auto& [g, p] : f.values) {
    if (p.is_zero()) continue;
    auto w = word_index_.find(g);
    if (w == word_index_.end())
      throw TruncationError("Hom element supported on a Gamma-word beyond degree " + std::to_string(gamma_bound_));
    for (const auto& [m, c] : p.terms()) {
      auto i = index(f.degree, w->second, m);
      if (!i) throw std::invalid_argument("Hom element value has the wrong degree");
      out.emplace_back(*i, c);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

HomElement hom_differential(const ClosureComplex& closure, const HomElement& f, int gamma_bound) {
  HomComplex h(closure, gamma_bound);
  return h.element(f.degree + 1, h.differential(f.degree).multiply(h.coordinates(f)));
}

ClosureConstraints constraints_for(HomFiltration f, int k) {
  ClosureConstraints c;
  if (f == HomFiltration::weighted && k > 2) c.weight_k = k;
  if (f == HomFiltration::odd) c.odd_filtered = true;
  return c;
}

int filtration_k(const Derivation& delta) { return lowest_wordlength(delta).value_or(2); }

int ExtResult::dim() const {
  int n = 0;
  for (const auto& d : degrees) n += d.dim;
  return n;
}

std::optional<int> ExtResult::depth() const {
  std::optional<int> best;
  for (const auto& c : classes)
    if (!best || c.level < *best) best = c.level;
  return best;
}

namespace {

struct Round {
  std::vector<ExtDegree> degrees;
  std::vector<ExtClass> classes;
};

class ExtEngine {
 public:
  ExtEngine(const ClosureComplex& cc, HomFiltration f, int k) : cc_(cc), filtration_(f), k_(k) {}

  const HomComplex& complex(int G) {
    auto it = complexes_.find(G);
    if (it == complexes_.end()) it = complexes_.emplace(G, std::make_unique<HomComplex>(cc_, G)).first;
    return *it->second;
  }

  const SparseMatrix& matrix(int G, int n) {
    auto key = std::make_pair(G, n);
    auto it = matrices_.find(key);
    if (it == matrices_.end()) it = matrices_.emplace(key, complex(G).differential(n)).first;
    return it->second;
  }

  // Image of H^n(Hom_{<=big}) in H^n(Hom_{<=small}), with a filtration-adapted basis.
  ExtDegree stable_image(int small, int big, int n, std::vector<ExtClass>& classes) {
    const auto& hs = complex(small);
    const auto& hb = complex(big);
    const auto& M = matrix(big, n);
    const auto levels = hb.levels(n, filtration_, k_);
    std::vector<int> cols(levels.size());
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](int x, int y) {
      return levels[static_cast<std::size_t>(x)] > levels[static_cast<std::size_t>(y)];
    });
    std::vector<int> rows(static_cast<std::size_t>(M.rows()));
    std::iota(rows.begin(), rows.end(), 0);
    const auto kernel = kernel_by_free_column(M.select(rows, cols));

    const int size_small = static_cast<int>(hs.basis(n).size());
    Echelon span(size_small);
    const auto& in = matrix(small, n - 1);
    for (int c = 0; c < in.cols(); ++c) span.insert(in.column(c));

    // ev lands in LambdaV^n; word 0 occupies the first block of the Hom basis.
    const auto& space = cc_.model().space;
    const int block = n >= 0 ? static_cast<int>(space->basis(n).size()) : 0;
    Echelon ev_bounds(block);
    if (n >= 1) {
      const SparseMatrix din = derivation_matrix(cc_.base(), n - 1);
      for (int c = 0; c < din.cols(); ++c) ev_bounds.insert(din.column(c));
    }
    Echelon ev_span = ev_bounds;

    ExtDegree out;
    out.degree = n;
    for (const auto& [free, v] : kernel) {
      SparseVector restricted;
      for (const auto& [i, q] : v) {
        const int original = cols[static_cast<std::size_t>(i)];
        if (original < size_small) restricted.emplace_back(original, q);
      }
      std::sort(restricted.begin(), restricted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      if (!span.insert(restricted)) continue;
      ExtClass cls;
      cls.degree = n;
      cls.level = levels[static_cast<std::size_t>(cols[static_cast<std::size_t>(free)])];
      cls.representative = hs.element(n, restricted);
      SparseVector ev;
      for (const auto& [i, q] : restricted)
        if (i < block) ev.emplace_back(i, q);
      cls.evaluation_nonzero = !ev_bounds.contains(ev);
      if (ev_span.insert(ev)) ++out.evaluation_rank;
      ++out.dim;
      ++out.graded[cls.level];
      classes.push_back(std::move(cls));
    }
    return out;
  }

 private:
  const ClosureComplex& cc_;
  HomFiltration filtration_;
  int k_;
  std::map<int, std::unique_ptr<HomComplex>> complexes_;
  std::map<std::pair<int, int>, SparseMatrix> matrices_;
};

}  // namespace

ExtResult ext(const Model& model, const Derivation& delta, ExtOptions options) {
  ExtResult result;
  result.filtration = options.filtration;
  result.k = filtration_k(delta);
  const int maxdeg = model.max_generator_degree();
  const auto cc = acyclic_closure(model, delta, maxdeg + 1, constraints_for(options.filtration, result.k));
  const int center = options.center.value_or(formal_dimension_bound(model));
  const int G0 = options.initial_gamma_bound > 0 ? options.initial_gamma_bound : std::max(2 * maxdeg, 4);
  const int step = options.gamma_step > 0 ? options.gamma_step : std::max(maxdeg, 2);

  result.gamma_step = step;
  ExtEngine engine(cc, options.filtration, result.k);
  std::optional<std::vector<ExtDegree>> previous;
  for (int round = 0; round < options.max_rounds; ++round) {
    const int G = G0 + round * step;
    result.schedule.push_back(G);
    Round r;
    for (int n = center - options.window; n <= center + options.window; ++n)
      r.degrees.push_back(engine.stable_image(G, G + step, n, r.classes));
    result.degrees = r.degrees;
    result.classes = std::move(r.classes);
    result.gamma_bound = G;
    if (previous && *previous == r.degrees) {
      result.stable = true;
      return result;
    }
    previous = std::move(r.degrees);
  }
  result.note = "truncation did not stabilise after " + std::to_string(options.max_rounds) + " rounds";
  return result;
}

int depth(const Model& model, const Derivation& delta, ExtOptions options) {
  const auto r = ext(model, delta, options);
  if (!r.stable) throw TruncationError("depth: " + r.note);
  auto d = r.depth();
  if (!d) throw std::logic_error("depth: Ext vanishes on the computed window");
  return *d;
}

CohomologyClass evaluation(const Model& model, const Derivation& delta, const HomElement& f) {
  auto it = f.values.find(model.space->unit());
  if (it == f.values.end() || it->second.is_zero()) {
    CohomologyClass c;
    c.degree = f.degree;
    c.representative = Polynomial(model.space);
    return c;
  }
  return make_class(delta, it->second);
}

GorensteinReport gorenstein_check(const Model& model, const Derivation& delta, ExtOptions options) {
  const auto r = ext(model, delta, options);
  GorensteinReport g;
  g.stable = r.stable;
  g.dim = r.dim();
  if (r.classes.size() == 1) {
    g.degree = r.classes.front().degree;
    g.level = r.classes.front().level;
    g.evaluation_nonzero = r.classes.front().evaluation_nonzero;
  }
  return g;
}

}  // namespace sullivan
