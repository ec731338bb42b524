#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "filiform/rational.hpp"

namespace filiform {

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  /// Entries may be unsorted and contain duplicates or zeros; they are merged.
  explicit SparseVector(std::vector<Entry> entries);
  static SparseVector from_dense(const Vector& dense);
  static SparseVector unit(std::size_t index) { return SparseVector({{index, Rational(1)}}); }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational at(std::size_t index) const;
  std::size_t leading() const { return entries_.front().first; }

  Vector to_dense(std::size_t dimension) const;

  /// this += factor * other
  void add_scaled(const SparseVector& other, const Rational& factor);
  void scale(const Rational& factor);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

SparseVector operator+(const SparseVector& a, const SparseVector& b);
SparseVector operator-(const SparseVector& a, const SparseVector& b);
SparseVector operator*(const Rational& c, const SparseVector& v);

class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  /// Rows given as sparse vectors over column indices.
  SparseMatrix(std::size_t cols, std::vector<SparseVector> rows);
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<SparseVector>& row_vectors() const { return rows_; }
  Rational at(std::size_t r, std::size_t c) const { return rows_[r].at(c); }

  void add(std::size_t r, std::size_t c, const Rational& value);
  void set_row(std::size_t r, SparseVector v);

  SparseVector multiply(const SparseVector& v) const;
  SparseMatrix transpose() const;
  std::vector<Vector> to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

struct RowEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  SparseMatrix reduced{0, 0};  // rank rows, unique reduced row-echelon form
};

RowEchelon rref(const SparseMatrix& m);

/// Subspace of Q^ambient held by its reduced row-echelon basis.
class LinearSubspace {
 public:
  explicit LinearSubspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static LinearSubspace span(std::size_t ambient, const std::vector<SparseVector>& vectors);
  static LinearSubspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  std::vector<std::size_t> pivots() const;

  bool contains(const SparseVector& v) const;
  bool contains(const LinearSubspace& other) const;
  /// Reduces v modulo the subspace using the pivot columns.
  SparseVector reduce(SparseVector v) const;

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<SparseVector> basis_;
};

LinearSubspace kernel_basis(const SparseMatrix& m);

/// Some v with m v = rhs (free variables zero after rref), or nullopt.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& rhs);

/// Exact determinant of a skew-symmetric matrix; zero for odd size.
Rational skew_determinant(const SparseMatrix& m);

Rational determinant(std::vector<Vector> dense);

}  // namespace filiform
