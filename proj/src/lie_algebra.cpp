#include "filiform/lie_algebra.hpp"

#include <algorithm>

namespace filiform {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::graded:
      return "graded";
    case Flavor::filtered:
      return "filtered";
    case Flavor::plain:
      return "plain";
  }
  return "plain";
}

Flavor parse_flavor(const std::string& text) {
  if (text == "graded") return Flavor::graded;
  if (text == "filtered") return Flavor::filtered;
  if (text == "plain") return Flavor::plain;
  throw InputError("unknown flavor '" + text + "'");
}

namespace {

bool satisfies(Flavor f, const std::vector<int>& w, const LieAlgebra::Brackets& brackets) {
  if (f == Flavor::plain) return true;
  for (const auto& [ij, v] : brackets) {
    int source = w[ij.first] + w[ij.second];
    for (const auto& [k, c] : v.entries()) {
      if (f == Flavor::graded && w[k] != source) return false;
      if (f == Flavor::filtered && w[k] < source) return false;
    }
  }
  return true;
}

}  // namespace

Flavor strongest_flavor(const std::vector<int>& weights, const LieAlgebra::Brackets& brackets) {
  if (satisfies(Flavor::graded, weights, brackets)) return Flavor::graded;
  if (satisfies(Flavor::filtered, weights, brackets)) return Flavor::filtered;
  return Flavor::plain;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<int> weights, Flavor flavor, Brackets brackets)
    : name_(std::move(name)), weights_(std::move(weights)), flavor_(flavor) {
  const std::size_t n = weights_.size();
  for (int w : weights_)
    if (w < 1) throw PreconditionFailed("basis weights must be positive");
  for (auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (i >= n || j >= n) throw DimensionMismatch("bracket index out of range");
    if (i == j) throw PreconditionFailed("bracket [e_i, e_i] cannot be prescribed");
    if (!v.empty() && v.entries().back().first >= n) throw DimensionMismatch("bracket target out of range");
    if (v.empty()) continue;
    if (i < j)
      brackets_[{i, j}].add_scaled(v, Rational(1));
    else
      brackets_[{j, i}].add_scaled(v, Rational(-1));
  }
  std::erase_if(brackets_, [](const auto& kv) { return kv.second.empty(); });
  if (!satisfies(flavor_, weights_, brackets_))
    throw PreconditionFailed("structure constants of '" + name_ + "' violate the " + to_string(flavor_) +
                             " weight condition");
  dual_.resize(n);
  for (const auto& [ij, v] : brackets_)
    for (const auto& [k, c] : v.entries()) dual_[k].push_back({ij.first, ij.second, c});
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i) + 1;
  return LieAlgebra("abelian(" + std::to_string(n) + ")", std::move(w), Flavor::graded, {});
}

SparseVector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw DimensionMismatch("basis index out of range");
  if (i == j) return {};
  auto it = brackets_.find({std::min(i, j), std::max(i, j)});
  if (it == brackets_.end()) return {};
  return i < j ? it->second : Rational(-1) * it->second;
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const { return bracket_basis(i, j).at(k); }

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra g = *this;
  g.name_ = std::move(name);
  return g;
}

LieAlgebra LieAlgebra::with_flavor(Flavor flavor) const { return LieAlgebra(name_, weights_, flavor, brackets_); }

bool LieAlgebra::same_constants(const LieAlgebra& other) const {
  return dim() == other.dim() && brackets_ == other.brackets_;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.weights_ == b.weights_ && a.flavor_ == b.flavor_ && a.brackets_ == b.brackets_;
}

SparseVector bracket(const LieAlgebra& g, const SparseVector& x, const SparseVector& y) {
  const std::size_t n = g.dim();
  if ((!x.empty() && x.entries().back().first >= n) || (!y.empty() && y.entries().back().first >= n))
    throw DimensionMismatch("vector does not live in the algebra");
  SparseVector out;
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries())
      if (i != j) out.add_scaled(g.bracket_basis(i, j), a * b);
  return out;
}

std::vector<JacobiFailure> jacobi_residual(const LieAlgebra& g) {
  std::vector<JacobiFailure> failures;
  const std::size_t n = g.dim();
  auto bracket_with = [&](const SparseVector& v, std::size_t k) {
    SparseVector out;
    for (const auto& [i, a] : v.entries())
      if (i != k) out.add_scaled(g.bracket_basis(i, k), a);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector r = bracket_with(g.bracket_basis(i, j), k);
        r.add_scaled(bracket_with(g.bracket_basis(j, k), i), Rational(1));
        r.add_scaled(bracket_with(g.bracket_basis(k, i), j), Rational(1));
        if (!r.empty()) failures.push_back({i, j, k, std::move(r)});
      }
  return failures;
}

std::vector<std::size_t> Flag::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : spaces) out.push_back(s.dim());
  return out;
}

void Flag::validate() const {
  for (std::size_t k = 0; k + 1 < spaces.size(); ++k)
    if (!spaces[k].contains(spaces[k + 1])) throw PreconditionFailed("flag levels are not nested");
}

Flag lower_central_series(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Flag f;
  f.spaces.push_back(LinearSubspace::whole(n));
  while (true) {
    const auto& last = f.spaces.back();
    std::vector<SparseVector> gens;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : last.basis()) {
        auto b = bracket(g, SparseVector::unit(i), v);
        if (!b.empty()) gens.push_back(std::move(b));
      }
    auto next = LinearSubspace::span(n, gens);
    if (next == last) break;
    bool zero = next.dim() == 0;
    f.spaces.push_back(std::move(next));
    if (zero) break;
  }
  return f;
}

std::optional<std::size_t> nil_index(const LieAlgebra& g) {
  auto f = lower_central_series(g);
  if (f.spaces.back().dim() != 0) return std::nullopt;
  return f.spaces.size() - 1;
}

bool is_filiform(const LieAlgebra& g) {
  auto s = nil_index(g);
  return s && g.dim() >= 2 && *s == g.dim() - 1;
}

LinearSubspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // row (i, k): coefficient of e_k in [z, e_i]
  SparseMatrix m(n * n, n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < n; ++i)
      for (auto b = g.bracket_basis(z, i); const auto& [k, c] : b.entries()) m.add(i * n + k, z, c);
  return kernel_basis(m);
}

Flag weight_flag(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  int top = n == 0 ? 0 : *std::max_element(g.weights().begin(), g.weights().end());
  Flag f;
  for (int level = 1; level <= top; ++level) {
    std::vector<SparseVector> gens;
    for (std::size_t i = 0; i < n; ++i)
      if (g.weight(i) >= level) gens.push_back(SparseVector::unit(i));
    f.spaces.push_back(LinearSubspace::span(n, gens));
  }
  return f;
}

Flag basis_flag(std::size_t n) {
  Flag f;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SparseVector> gens;
    for (std::size_t i = j; i < n; ++i) gens.push_back(SparseVector::unit(i));
    f.spaces.push_back(LinearSubspace::span(n, gens));
  }
  return f;
}

LieAlgebra associated_graded(const LieAlgebra& g, const Flag& f) {
  const std::size_t n = g.dim();
  f.validate();
  if (f.spaces.empty() || f.spaces.front().dim() != n)
    throw PreconditionFailed("filtration must start with the whole algebra");

  std::vector<SparseVector> basis;
  std::vector<int> level;
  LinearSubspace below(n);
  for (std::size_t k = f.spaces.size(); k-- > 0;) {
    std::vector<SparseVector> chosen;
    for (const auto& b : f.spaces[k].basis()) {
      if (below.contains(b)) continue;
      chosen.push_back(b);
      auto gens = below.basis();
      gens.push_back(b);
      below = LinearSubspace::span(n, gens);
    }
    basis.insert(basis.begin(), chosen.begin(), chosen.end());
    level.insert(level.begin(), chosen.size(), static_cast<int>(k) + 1);
  }

  SparseMatrix to_old(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& [i, c] : basis[a].entries()) to_old.add(i, a, c);

  LieAlgebra::Brackets out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto v = bracket(g, basis[a], basis[b]);
      if (v.empty()) continue;
      auto coords = solve(to_old, v);
      int target = level[a] + level[b];
      std::vector<SparseVector::Entry> kept;
      for (const auto& [c, x] : coords->entries()) {
        if (level[c] < target)
          throw PreconditionFailed("filtration is not compatible with the bracket");
        if (level[c] == target) kept.emplace_back(c, x);
      }
      if (!kept.empty()) out[{a, b}] = SparseVector(std::move(kept));
    }
  return LieAlgebra("gr(" + g.name() + ")", level, Flavor::graded, std::move(out));
}

BasisChange::BasisChange(std::vector<Vector> columns) : columns_(std::move(columns)) {
  const std::size_t n = columns_.size();
  if (n == 0) throw PreconditionFailed("empty basis change");
  for (const auto& c : columns_)
    if (c.size() != n) throw DimensionMismatch("basis change matrix is not square");
  const Rational& a = columns_[0][0];
  if (a == 0) throw PreconditionFailed("basis change needs a nonzero diagonal");
  Rational expected = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < i; ++r)
      if (columns_[i][r] != 0) throw PreconditionFailed("basis change must be lower triangular");
    if (columns_[i][i] != expected) throw PreconditionFailed("basis change diagonal must be alpha, alpha^2, ...");
    expected *= a;
  }
}

BasisChange BasisChange::identity(std::size_t n) { return diagonal(n, Rational(1)); }

BasisChange BasisChange::diagonal(std::size_t n, const Rational& alpha) {
  std::vector<Vector> cols(n, Vector(n));
  Rational p = alpha;
  for (std::size_t i = 0; i < n; ++i) {
    cols[i][i] = p;
    p *= alpha;
  }
  return BasisChange(std::move(cols));
}

bool BasisChange::is_identity() const { return *this == identity(dim()); }

SparseVector BasisChange::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [i, c] : v.entries()) {
    if (i >= dim()) throw DimensionMismatch("vector does not match basis change");
    out.add_scaled(SparseVector::from_dense(columns_[i]), c);
  }
  return out;
}

BasisChange BasisChange::inverse() const {
  const std::size_t n = dim();
  // Forward substitution column by column: M X = I with M lower triangular.
  std::vector<Vector> inv(n, Vector(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = col; r < n; ++r) {
      Rational acc = (r == col) ? Rational(1) : Rational(0);
      for (std::size_t k = col; k < r; ++k) acc -= columns_[k][r] * inv[col][k];
      inv[col][r] = acc / columns_[r][r];
    }
  }
  return BasisChange(std::move(inv));
}

BasisChange BasisChange::compose(const BasisChange& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("basis changes of different size");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < dim(); ++i) cols.push_back(apply(SparseVector::from_dense(other.columns_[i])).to_dense(dim()));
  return BasisChange(std::move(cols));
}

LieAlgebra apply_basis_change(const LieAlgebra& g, const BasisChange& phi) {
  const std::size_t n = g.dim();
  if (phi.dim() != n) throw DimensionMismatch("basis change dimension differs from the algebra");
  BasisChange inv = phi.inverse();
  std::vector<SparseVector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(SparseVector::from_dense(phi.columns()[i]));
  LieAlgebra::Brackets out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto v = inv.apply(bracket(g, images[i], images[j]));
      if (!v.empty()) out[{i, j}] = std::move(v);
    }
  Flavor f = strongest_flavor(g.weights(), out);
  if (g.flavor() == Flavor::filtered && f == Flavor::graded) f = Flavor::filtered;
  if (g.flavor() == Flavor::plain) f = Flavor::plain;
  return LieAlgebra(g.name(), g.weights(), f, std::move(out));
}

}  // namespace filiform
