#include "filiform/sparse.hpp"

#include <algorithm>
#include <map>

namespace filiform {

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [index, value] : entries) {
    if (!entries_.empty() && entries_.back().first == index) {
      entries_.back().second += value;
      if (entries_.back().second == 0) entries_.pop_back();
    } else if (value != 0) {
      entries_.emplace_back(index, std::move(value));
    }
  }
}

SparseVector SparseVector::from_dense(const Vector& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.entries_.emplace_back(i, dense[i]);
  return v;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

Vector SparseVector::to_dense(std::size_t dimension) const {
  Vector out(dimension);
  for (const auto& [i, c] : entries_) {
    if (i >= dimension) throw DimensionMismatch("sparse vector index out of range");
    out[i] = c;
  }
  return out;
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& factor) {
  if (factor == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational sum = a->second + factor * b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.add_scaled(b, Rational(1));
  return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.add_scaled(b, Rational(-1));
  return r;
}

SparseVector operator*(const Rational& c, const SparseVector& v) {
  SparseVector r = v;
  r.scale(c);
  return r;
}

SparseMatrix::SparseMatrix(std::size_t cols, std::vector<SparseVector> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (!r.empty() && r.entries().back().first >= cols_) throw DimensionMismatch("matrix entry outside column range");
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVector::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<SparseVector> sparse;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged dense matrix");
    sparse.push_back(SparseVector::from_dense(r));
  }
  return SparseMatrix(cols, std::move(sparse));
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_.size() || c >= cols_) throw DimensionMismatch("matrix index out of range");
  rows_[r].add_scaled(SparseVector::unit(c), value);
}

void SparseMatrix::set_row(std::size_t r, SparseVector v) {
  if (r >= rows_.size()) throw DimensionMismatch("row index out of range");
  if (!v.empty() && v.entries().back().first >= cols_) throw DimensionMismatch("row entry outside column range");
  rows_[r] = std::move(v);
}

SparseVector SparseMatrix::multiply(const SparseVector& v) const {
  if (!v.empty() && v.entries().back().first >= cols_) throw DimensionMismatch("vector longer than column count");
  std::vector<SparseVector::Entry> out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational acc = 0;
    const auto& a = rows_[r].entries();
    const auto& b = v.entries();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first) {
        ++i;
      } else if (b[j].first < a[i].first) {
        ++j;
      } else {
        acc += a[i++].second * b[j++].second;
      }
    }
    if (acc != 0) out.emplace_back(r, acc);
  }
  return SparseVector(std::move(out));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> cols(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r].entries()) cols[c].emplace_back(r, v);
  std::vector<SparseVector> out;
  out.reserve(cols_);
  for (auto& c : cols) out.emplace_back(std::move(c));
  return SparseMatrix(rows_.size(), std::move(out));
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> out;
  for (const auto& r : rows_) out.push_back(r.to_dense(cols_));
  return out;
}

namespace {

// Clears every entry of v sitting on a pivot column, scanning left to right.
// Pivot rows have their leading 1 at the pivot and nothing to the left of it.
void eliminate(SparseVector& v, const std::map<std::size_t, SparseVector>& pivot_rows) {
  std::size_t start = 0;
  while (true) {
    const auto& e = v.entries();
    auto it = std::find_if(e.begin(), e.end(),
                           [&](const SparseVector::Entry& x) { return x.first >= start && pivot_rows.count(x.first); });
    if (it == e.end()) return;
    std::size_t col = it->first;
    Rational factor = -it->second;
    v.add_scaled(pivot_rows.at(col), factor);
    start = col + 1;
  }
}

}  // namespace

RowEchelon rref(const SparseMatrix& m) {
  std::map<std::size_t, SparseVector> pivot_rows;
  for (const auto& row : m.row_vectors()) {
    SparseVector v = row;
    eliminate(v, pivot_rows);
    if (v.empty()) continue;
    v.scale(Rational(1) / v.entries().front().second);
    pivot_rows.emplace(v.leading(), std::move(v));
  }
  // Back substitution, highest pivot first so every row used is already reduced.
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    SparseVector& v = it->second;
    std::size_t col = it->first;
    std::size_t start = col + 1;
    while (true) {
      const auto& e = v.entries();
      auto hit = std::find_if(e.begin(), e.end(), [&](const SparseVector::Entry& x) {
        return x.first >= start && pivot_rows.count(x.first);
      });
      if (hit == e.end()) break;
      std::size_t c = hit->first;
      Rational factor = -hit->second;
      v.add_scaled(pivot_rows.at(c), factor);
      start = c + 1;
    }
  }
  RowEchelon result;
  std::vector<SparseVector> rows;
  for (auto& [col, v] : pivot_rows) {
    result.pivots.push_back(col);
    rows.push_back(std::move(v));
  }
  result.rank = rows.size();
  result.reduced = SparseMatrix(m.cols(), std::move(rows));
  return result;
}

LinearSubspace LinearSubspace::span(std::size_t ambient, const std::vector<SparseVector>& vectors) {
  LinearSubspace s(ambient);
  s.basis_ = rref(SparseMatrix(ambient, vectors)).reduced.row_vectors();
  return s;
}

LinearSubspace LinearSubspace::whole(std::size_t ambient) {
  LinearSubspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(SparseVector::unit(i));
  return s;
}

std::vector<std::size_t> LinearSubspace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis_) out.push_back(b.leading());
  return out;
}

SparseVector LinearSubspace::reduce(SparseVector v) const {
  for (const auto& b : basis_) {
    Rational c = v.at(b.leading());
    if (c != 0) v.add_scaled(b, -c);
  }
  return v;
}

bool LinearSubspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const SparseVector& v) { return contains(v); });
}

LinearSubspace kernel_basis(const SparseMatrix& m) {
  auto echelon = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : echelon.pivots) is_pivot[p] = true;
  std::map<std::size_t, std::vector<SparseVector::Entry>> free_vectors;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_vectors[c].emplace_back(c, Rational(1));
  for (std::size_t r = 0; r < echelon.rank; ++r) {
    std::size_t p = echelon.pivots[r];
    for (const auto& [c, value] : echelon.reduced.row(r).entries())
      if (c != p) free_vectors[c].emplace_back(p, -value);
  }
  std::vector<SparseVector> vectors;
  for (auto& [c, entries] : free_vectors) vectors.emplace_back(std::move(entries));
  return LinearSubspace::span(m.cols(), vectors);
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& rhs) {
  if (!rhs.empty() && rhs.entries().back().first >= m.rows()) throw DimensionMismatch("rhs longer than row count");
  std::vector<SparseVector> rows = m.row_vectors();
  for (const auto& [r, value] : rhs.entries()) rows[r].add_scaled(SparseVector::unit(m.cols()), value);
  auto echelon = rref(SparseMatrix(m.cols() + 1, std::move(rows)));
  std::vector<SparseVector::Entry> solution;
  for (std::size_t r = 0; r < echelon.rank; ++r) {
    std::size_t p = echelon.pivots[r];
    if (p == m.cols()) return std::nullopt;
    Rational value = echelon.reduced.row(r).at(m.cols());
    if (value != 0) solution.emplace_back(p, value);
  }
  return SparseVector(std::move(solution));
}

Rational determinant(std::vector<Vector> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Rational inv = Rational(1) / a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

Rational skew_determinant(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionFailed("skew determinant needs a square matrix");
  auto dense = m.to_dense();
  const std::size_t n = dense.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (dense[i][j] != -dense[j][i]) throw PreconditionFailed("matrix is not skew-symmetric");
  if (n % 2 == 1) return Rational(0);
  return determinant(std::move(dense));
}

}  // namespace filiform
