#pragma once

// Exact sparse linear algebra over Q.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sullivan/algebra.hpp"

namespace sullivan {

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

SparseVector make_sparse(std::span<const Rational> dense);
std::vector<Rational> to_dense(const SparseVector& v, int size);

/// Column-major sparse matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Accumulates value into (row, col).
  void add(int row, int col, const Rational& value);
  void set_column(int col, SparseVector column);
  const SparseVector& column(int col) const { return columns_[col]; }
  Rational at(int row, int col) const;

  SparseMatrix transpose() const;
  /// Rows of the matrix as sparse vectors over the column index.
  std::vector<SparseVector> row_vectors() const;
  SparseVector multiply(const SparseVector& v) const;
  std::size_t nonzeros() const;

  /// Submatrix keeping the given rows and columns (in the given order).
  SparseMatrix select(std::span<const int> rows, std::span<const int> cols) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVector> columns_;
};

/// Incremental fraction-free semi-echelon form. Rows are primitive integer
/// vectors with pairwise distinct leading indices; pivot choice is the
/// smallest index, so results are deterministic.
class Echelon {
 public:
  explicit Echelon(int ambient);

  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Returns true when v was independent of the rows so far.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;

  /// Reduced row echelon basis over Q (pivot entries 1, pivots ascending).
  std::vector<SparseVector> reduced_basis() const;

  using IntVector = std::vector<std::pair<int, Integer>>;
  const std::vector<IntVector>& rows() const { return rows_; }

 private:
  /// Reduces v in place; returns true if it vanished.
  bool reduce(IntVector& v) const;

  int ambient_;
  std::vector<IntVector> rows_;
  std::vector<int> pivot_row_;  // per index: row with that leading index, or -1
};

/// Subspace of Q^n held in reduced row echelon form (unique representation).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace span(int ambient, std::span<const SparseVector> vectors);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVector>& basis() const { return basis_; }

  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  bool operator==(const Subspace& other) const = default;

 private:
  int ambient_ = 0;
  std::vector<SparseVector> basis_;
};

int rank(const SparseMatrix& m);
Subspace kernel(const SparseMatrix& m);
Subspace image(const SparseMatrix& m);

/// Kernel basis indexed by free column: the vector for free column f has a 1
/// at f, zero at every other free column, and support inside columns <= f.
/// Callers rely on the last property to intersect with leading column blocks.
std::vector<std::pair<int, SparseVector>> kernel_by_free_column(const SparseMatrix& m);

/// A particular solution of m * v = b, or nullopt when infeasible.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);

/// dim(inside) - dim(sub). Throws std::logic_error when sub is not contained.
int quotient_dim(const Subspace& sub, const Subspace& inside);

/// Dimension of the span of the given vectors.
int span_dim(int ambient, std::span<const SparseVector> vectors);

}  // namespace sullivan
