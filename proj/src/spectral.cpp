#include "sullivan/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "sullivan/ellipticity.hpp"

namespace sullivan {

int FilteredComplex::size(int n) const {
  auto it = levels.find(n);
  return it == levels.end() ? 0 : static_cast<int>(it->second.size());
}

void FilteredComplex::check() const {
  for (int n = lo - 1; n <= hi + 1; ++n)
    if (!levels.count(n)) throw std::invalid_argument("FilteredComplex: missing levels in degree " + std::to_string(n));
  for (int n = lo - 1; n <= hi; ++n) {
    auto it = differential.find(n);
    if (it == differential.end()) throw std::invalid_argument("FilteredComplex: missing differential in degree " + std::to_string(n));
    const auto& d = it->second;
    if (d.cols() != size(n) || d.rows() != size(n + 1))
      throw std::invalid_argument("FilteredComplex: differential shape mismatch in degree " + std::to_string(n));
    const auto& src = levels.at(n);
    const auto& dst = levels.at(n + 1);
    for (int c = 0; c < d.cols(); ++c)
      for (const auto& [row, q] : d.column(c))
        if (dst[static_cast<std::size_t>(row)] < src[static_cast<std::size_t>(c)])
          throw std::invalid_argument("FilteredComplex: differential lowers the filtration in degree " + std::to_string(n));
  }
  if (extension) {
    extension->check();
    for (int n = lo - 1; n <= hi + 1; ++n) {
      const auto& mine = levels.at(n);
      const auto& theirs = extension->levels.at(n);
      if (theirs.size() < mine.size() || !std::equal(mine.begin(), mine.end(), theirs.begin()))
        throw std::invalid_argument("FilteredComplex: extension does not extend the basis in degree " + std::to_string(n));
    }
  }
}

int PageTable::at(int p, int q) const {
  auto it = dims.find({p, q});
  return it == dims.end() ? 0 : it->second;
}

int PageTable::total(int n) const {
  int sum = 0;
  for (const auto& [pq, d] : dims)
    if (pq.first + pq.second == n) sum += d;
  return sum;
}

bool PageTable::same_dims(const PageTable& other, int lo, int hi) const {
  auto restrict = [&](const PageTable& t) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [pq, d] : t.dims)
      if (pq.first + pq.second >= lo && pq.first + pq.second <= hi) out[pq] = d;
    return out;
  };
  return restrict(*this) == restrict(other);
}

namespace {

std::pair<int, int> level_range(const std::vector<int>& levels) {
  if (levels.empty()) return {0, -1};
  auto [mn, mx] = std::minmax_element(levels.begin(), levels.end());
  return {*mn, *mx};
}

// Z_r^p in one degree of one complex, as a list of vectors, memoised.
class CycleCache {
 public:
  explicit CycleCache(const FilteredComplex& fc) : fc_(fc) {}

  const std::vector<SparseVector>& cycles(int n, int r, int p) {
    const auto& lv = fc_.levels.at(n);
    auto [mn, mx] = level_range(lv);
    // Condition dx in F^{p+r}: rows of level below the threshold must vanish.
    int threshold = p + std::max(r, 0);
    p = std::max(p, mn);
    if (p > mx) return empty_;
    const auto& next = fc_.levels.at(n + 1);
    auto [nmn, nmx] = level_range(next);
    threshold = std::clamp(threshold, p, std::max(nmx + 1, p));
    const auto key = std::make_tuple(n, threshold, p);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    std::vector<int> cols;
    for (std::size_t j = 0; j < lv.size(); ++j)
      if (lv[j] >= p) cols.push_back(static_cast<int>(j));
    std::vector<int> rows;
    for (std::size_t i = 0; i < next.size(); ++i)
      if (next[i] < threshold) rows.push_back(static_cast<int>(i));
    std::vector<SparseVector> out;
    if (rows.empty()) {
      for (int c : cols) out.push_back({{c, Rational(1)}});
    } else {
      const SparseMatrix sub = fc_.differential.at(n).select(rows, cols);
      const Subspace z = kernel(sub);
      for (const auto& v : z.basis()) {
        SparseVector lifted;
        for (const auto& [i, q] : v) lifted.emplace_back(cols[static_cast<std::size_t>(i)], q);
        out.push_back(std::move(lifted));
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  const FilteredComplex& fc_;
  std::map<std::tuple<int, int, int>, std::vector<SparseVector>> cache_;
  std::vector<SparseVector> empty_;
};

SparseVector truncate_to(const SparseVector& v, int size) {
  SparseVector out;
  for (const auto& [i, q] : v)
    if (i < size) out.emplace_back(i, q);
  return out;
}

}  // namespace

int limit_page(const FilteredComplex& fc) {
  int mn = 0, mx = 0;
  bool first = true;
  for (const auto& [n, lv] : fc.levels) {
    if (lv.empty()) continue;
    auto [a, b] = level_range(lv);
    if (first || a < mn) mn = a;
    if (first || b > mx) mx = b;
    first = false;
  }
  return first ? 1 : mx - mn + 2;
}

std::vector<PageTable> pages(const FilteredComplex& fc, int r_max) {
  fc.check();
  CycleCache small(fc);
  std::optional<CycleCache> big;
  if (fc.extension) big.emplace(*fc.extension);

  std::vector<PageTable> out;
  for (int r = 0; r <= r_max; ++r) {
    PageTable page;
    page.r = r;
    for (int n = fc.lo; n <= fc.hi; ++n) {
      const int size = fc.size(n);
      auto [mn, mx] = level_range(fc.levels.at(n));
      const auto& d_in = fc.differential.at(n - 1);
      for (int p = mn; p <= mx; ++p) {
        Echelon den(size);
        for (const auto& v : small.cycles(n, r - 1, p + 1)) den.insert(v);
        for (const auto& v : small.cycles(n - 1, r - 1, p - r + 1)) den.insert(d_in.multiply(v));
        const int base = den.rank();

        auto count = [&](const std::vector<SparseVector>& numerators, bool project) {
          Echelon e = den;
          for (const auto& v : numerators) e.insert(project ? truncate_to(v, size) : v);
          return e.rank() - base;
        };
        const int plain = count(small.cycles(n, r, p), false);
        int value = plain;
        if (big) {
          value = count(big->cycles(n, r, p), true);
          if (value != plain) page.leaks.insert({p, n - p});
        }
        if (value != 0) page.dims[{p, n - p}] = value;
      }
    }
    out.push_back(std::move(page));
  }
  return out;
}

namespace {

FilteredComplex lambda_complex(const Model& model, const Derivation& d, int lo, int hi,
                               int (*level)(const Space&, const Monomial&)) {
  FilteredComplex fc;
  fc.lo = lo;
  fc.hi = hi;
  const auto& space = *model.space;
  for (int n = lo - 1; n <= hi + 1; ++n) {
    std::vector<int> lv;
    if (n >= 0)
      for (const auto& m : space.basis(n).monomials) lv.push_back(level(space, m));
    fc.levels[n] = std::move(lv);
  }
  for (int n = lo - 1; n <= hi; ++n) {
    if (n >= 0)
      fc.differential[n] = derivation_matrix(d, n);
    else
      fc.differential[n] = SparseMatrix(fc.size(n + 1), 0);
  }
  return fc;
}

}  // namespace

FilteredComplex wordlength_complex(const Model& model, const Derivation& d, int lo, int hi) {
  return lambda_complex(model, d, lo, hi, [](const Space&, const Monomial& m) { return m.length(); });
}

FilteredComplex odd_complex(const Model& model, const Derivation& d, int lo, int hi) {
  return lambda_complex(model, d, lo, hi,
                        [](const Space& s, const Monomial& m) { return s.degree(m) + s.odd_length(m); });
}

std::vector<PageTable> wordlength_ss(const Model& model, SpectralWindow window) {
  return pages(wordlength_complex(model, model.differential, window.lo, window.hi), window.r_max);
}

std::vector<PageTable> odd_ss(const Model& model, SpectralWindow window) {
  return pages(odd_complex(model, model.differential, window.lo, window.hi), window.r_max);
}

ExtComplex ext_complex(const Model& model, const Derivation& delta, HomFiltration f, int lo, int hi) {
  ExtComplex out;
  ExtOptions options;
  options.filtration = f;
  options.center = (lo + hi) / 2;
  options.window = std::max(options.center.value() - lo, hi - options.center.value());
  out.ext = ext(model, delta, options);
  if (!out.ext.stable) throw TruncationError("ext_complex: " + out.ext.note);

  const int k = out.ext.k;
  auto cc = std::make_shared<ClosureComplex>(
      acyclic_closure(model, delta, model.max_generator_degree() + 1, constraints_for(f, k)));
  auto build = [&](int G) {
    FilteredComplex fc;
    fc.lo = lo;
    fc.hi = hi;
    HomComplex h(*cc, G);
    for (int n = lo - 1; n <= hi + 1; ++n) fc.levels[n] = h.levels(n, f, k);
    for (int n = lo - 1; n <= hi; ++n) fc.differential[n] = h.differential(n);
    return fc;
  };
  out.complex = build(out.ext.gamma_bound);
  out.complex.extension = std::make_shared<const FilteredComplex>(build(out.ext.gamma_bound + out.ext.gamma_step));
  return out;
}

std::vector<PageTable> ext_wordlength_ss(const Model& model, SpectralWindow window, HomFiltration f) {
  if (f == HomFiltration::odd) throw std::invalid_argument("ext_wordlength_ss: use ext_odd_ss for the odd filtration");
  return pages(ext_complex(model, model.differential, f, window.lo, window.hi).complex, window.r_max);
}

std::vector<PageTable> ext_odd_ss(const Model& model, SpectralWindow window) {
  return pages(ext_complex(model, model.differential, HomFiltration::odd, window.lo, window.hi).complex,
               window.r_max);
}

std::map<std::pair<int, int>, int> bigraded_ext(const ExtResult& r) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& d : r.degrees)
    for (const auto& [p, dim] : d.graded)
      if (dim != 0) out[{p, d.degree - p}] += dim;
  return out;
}

}  // namespace sullivan
