#include "sullivan/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sullivan {

SparseVector make_sparse(std::span<const Rational> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(static_cast<int>(i), dense[i]);
  return out;
}

std::vector<Rational> to_dense(const SparseVector& v, int size) {
  std::vector<Rational> out(static_cast<std::size_t>(size));
  for (const auto& [i, c] : v) out[static_cast<std::size_t>(i)] = c;
  return out;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.add(i, j, rows[i][j]);
  return m;
}

void SparseMatrix::add(int row, int col, const Rational& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("SparseMatrix::add index out of range");
  if (value == 0) return;
  auto& column = columns_[static_cast<std::size_t>(col)];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const auto& e, int r) { return e.first < r; });
  if (it != column.end() && it->first == row) {
    it->second += value;
    if (it->second == 0) column.erase(it);
  } else {
    column.insert(it, {row, value});
  }
}

void SparseMatrix::set_column(int col, SparseVector column) {
  std::sort(column.begin(), column.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::erase_if(column, [](const auto& e) { return e.second == 0; });
  for (const auto& [r, v] : column)
    if (r < 0 || r >= rows_) throw std::out_of_range("set_column row index out of range");
  columns_[static_cast<std::size_t>(col)] = std::move(column);
}

Rational SparseMatrix::at(int row, int col) const {
  const auto& column = columns_[static_cast<std::size_t>(col)];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const auto& e, int r) { return e.first < r; });
  return (it != column.end() && it->first == row) ? it->second : Rational(0);
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> out(static_cast<std::size_t>(rows_));
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[static_cast<std::size_t>(c)])
      out[static_cast<std::size_t>(r)].emplace_back(c, v);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  auto rows = row_vectors();
  for (int r = 0; r < rows_; ++r) t.columns_[static_cast<std::size_t>(r)] = std::move(rows[r]);
  return t;
}

SparseVector SparseMatrix::multiply(const SparseVector& v) const {
  std::vector<Rational> acc(static_cast<std::size_t>(rows_));
  std::vector<char> touched(static_cast<std::size_t>(rows_), 0);
  for (const auto& [c, x] : v) {
    if (c < 0 || c >= cols_) throw std::out_of_range("vector index out of range");
    for (const auto& [r, a] : columns_[static_cast<std::size_t>(c)]) {
      acc[static_cast<std::size_t>(r)] += a * x;
      touched[static_cast<std::size_t>(r)] = 1;
    }
  }
  SparseVector out;
  for (int r = 0; r < rows_; ++r)
    if (touched[static_cast<std::size_t>(r)] && acc[static_cast<std::size_t>(r)] != 0)
      out.emplace_back(r, acc[static_cast<std::size_t>(r)]);
  return out;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::select(std::span<const int> rows, std::span<const int> cols) const {
  std::vector<int> row_map(static_cast<std::size_t>(rows_), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) row_map[static_cast<std::size_t>(rows[i])] = static_cast<int>(i);
  SparseMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVector col;
    for (const auto& [r, v] : columns_[static_cast<std::size_t>(cols[j])]) {
      const int nr = row_map[static_cast<std::size_t>(r)];
      if (nr >= 0) col.emplace_back(nr, v);
    }
    out.set_column(static_cast<int>(j), std::move(col));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Echelon

namespace {

using IntVector = Echelon::IntVector;

IntVector to_primitive(const SparseVector& v) {
  IntVector out;
  if (v.empty()) return out;
  Integer lcm_den = 1;
  for (const auto& [i, q] : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  out.reserve(v.size());
  for (const auto& [i, q] : v) out.emplace_back(i, Integer(q.get_num() * (lcm_den / q.get_den())));
  return out;
}

void make_primitive(IntVector& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [i, a] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(v.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [i, a] : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  }
}

// v <- a*v - b*row
void combine(IntVector& v, const Integer& a, const Integer& b, const IntVector& row,
             IntVector& scratch) {
  scratch.clear();
  scratch.reserve(v.size() + row.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < v.size() || j < row.size()) {
    if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
      scratch.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || row[j].first < v[i].first) {
      scratch.emplace_back(row[j].first, -b * row[j].second);
      ++j;
    } else {
      t = a * v[i].second - b * row[j].second;
      if (t != 0) scratch.emplace_back(v[i].first, t);
      ++i;
      ++j;
    }
  }
  v.swap(scratch);
}

}  // namespace

Echelon::Echelon(int ambient) : ambient_(ambient), pivot_row_(static_cast<std::size_t>(ambient), -1) {}

bool Echelon::reduce(IntVector& v) const {
  IntVector scratch;
  while (!v.empty()) {
    const int lead = v.front().first;
    const int r = pivot_row_[static_cast<std::size_t>(lead)];
    if (r < 0) return false;
    const auto& row = rows_[static_cast<std::size_t>(r)];
    const Integer& p = row.front().second;
    const Integer& c = v.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
    combine(v, p / g, c / g, row, scratch);
    make_primitive(v);
  }
  return true;
}

bool Echelon::insert(const SparseVector& v) {
  for (const auto& [i, q] : v)
    if (i < 0 || i >= ambient_) throw std::out_of_range("Echelon::insert index out of range");
  IntVector w = to_primitive(v);
  make_primitive(w);
  if (reduce(w)) return false;
  pivot_row_[static_cast<std::size_t>(w.front().first)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(w));
  return true;
}

bool Echelon::contains(const SparseVector& v) const {
  IntVector w = to_primitive(v);
  make_primitive(w);
  return reduce(w);
}

std::vector<SparseVector> Echelon::reduced_basis() const {
  // Back substitution in order of decreasing pivot.
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rows_[static_cast<std::size_t>(a)].front().first > rows_[static_cast<std::size_t>(b)].front().first;
  });
  std::vector<SparseVector> reduced(rows_.size());
  std::vector<int> reduced_at(static_cast<std::size_t>(ambient_), -1);
  for (int r : order) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    std::map<int, Rational> acc;
    const Rational lead(row.front().second);
    for (const auto& [i, a] : row) acc[i] += Rational(a) / lead;
    // Eliminate later pivots, which are already fully reduced.
    for (auto it = std::next(acc.begin()); it != acc.end();) {
      const int idx = it->first;
      const int pr = reduced_at[static_cast<std::size_t>(idx)];
      if (pr < 0 || it->second == 0) {
        ++it;
        continue;
      }
      const Rational factor = it->second;
      for (const auto& [j, b] : reduced[static_cast<std::size_t>(pr)]) acc[j] -= factor * b;
      it = acc.upper_bound(idx);
    }
    SparseVector out;
    for (const auto& [i, q] : acc)
      if (q != 0) out.emplace_back(i, q);
    reduced_at[static_cast<std::size_t>(row.front().first)] = r;
    reduced[static_cast<std::size_t>(r)] = std::move(out);
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  return reduced;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(int ambient, std::span<const SparseVector> vectors) {
  Echelon e(ambient);
  for (const auto& v : vectors) e.insert(v);
  Subspace s(ambient);
  s.basis_ = e.reduced_basis();
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  for (int i = 0; i < ambient; ++i) s.basis_.push_back({{i, Rational(1)}});
  return s;
}

bool Subspace::contains(const SparseVector& v) const {
  // Reduced basis: subtract pivot components, the remainder must vanish.
  std::map<int, Rational> acc(v.begin(), v.end());
  for (const auto& b : basis_) {
    auto it = acc.find(b.front().first);
    if (it == acc.end() || it->second == 0) continue;
    const Rational factor = it->second;
    for (const auto& [j, q] : b) acc[j] -= factor * q;
  }
  return std::all_of(acc.begin(), acc.end(), [](const auto& e) { return e.second == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const auto& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspaces of different ambient spaces");
  std::vector<SparseVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

// ---------------------------------------------------------------------------
// Matrix operations

int span_dim(int ambient, std::span<const SparseVector> vectors) {
  Echelon e(ambient);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

int rank(const SparseMatrix& m) {
  Echelon e(m.rows());
  for (int c = 0; c < m.cols(); ++c) e.insert(m.column(c));
  return e.rank();
}

Subspace image(const SparseMatrix& m) {
  std::vector<SparseVector> cols;
  cols.reserve(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

namespace {

// Semi-echelon of the row space over column indices [0, width).
Echelon row_echelon(const std::vector<SparseVector>& rows, int width) {
  Echelon e(width);
  for (const auto& r : rows) e.insert(r);
  return e;
}

// Solves the triangular system given by the echelon rows for the unknowns at
// pivot columns, with prescribed values at the non-pivot columns.
void back_substitute(const Echelon& e, std::map<int, Rational>& x, int rhs_column) {
  std::vector<const Echelon::IntVector*> rows;
  for (const auto& r : e.rows()) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(),
            [](auto* a, auto* b) { return a->front().first > b->front().first; });
  for (const auto* row : rows) {
    const int p = row->front().first;
    Rational acc = 0;
    for (std::size_t k = 1; k < row->size(); ++k) {
      const auto& [j, a] = (*row)[k];
      if (j == rhs_column) {
        acc -= Rational(a);
        continue;
      }
      auto it = x.find(j);
      if (it != x.end()) acc += Rational(a) * it->second;
    }
    const Rational value = -acc / Rational(row->front().second);
    if (value != 0) x[p] = value;
  }
}

}  // namespace

std::vector<std::pair<int, SparseVector>> kernel_by_free_column(const SparseMatrix& m) {
  const Echelon e = row_echelon(m.row_vectors(), m.cols());
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (const auto& r : e.rows()) is_pivot[static_cast<std::size_t>(r.front().first)] = 1;
  std::vector<std::pair<int, SparseVector>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::map<int, Rational> x{{f, Rational(1)}};
    back_substitute(e, x, -1);
    out.emplace_back(f, SparseVector(x.begin(), x.end()));
  }
  return out;
}

Subspace kernel(const SparseMatrix& m) {
  std::vector<SparseVector> vs;
  for (auto& [f, v] : kernel_by_free_column(m)) vs.push_back(std::move(v));
  return Subspace::span(m.cols(), vs);
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  for (const auto& [i, q] : b)
    if (i < 0 || i >= m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  auto rows = m.row_vectors();
  for (const auto& [i, q] : b) rows[static_cast<std::size_t>(i)].emplace_back(m.cols(), q);
  const Echelon e = row_echelon(rows, m.cols() + 1);
  for (const auto& r : e.rows())
    if (r.front().first == m.cols()) return std::nullopt;
  std::map<int, Rational> x;
  back_substitute(e, x, m.cols());
  return SparseVector(x.begin(), x.end());
}

int quotient_dim(const Subspace& sub, const Subspace& inside) {
  if (!inside.contains(sub)) throw std::logic_error("quotient_dim: subspace is not contained");
  return inside.dim() - sub.dim();
}

}  // namespace sullivan
