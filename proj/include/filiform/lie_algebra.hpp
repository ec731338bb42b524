#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "filiform/sparse.hpp"

namespace filiform {

enum class Flavor { graded, filtered, plain };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& text);

/// Structure constants over a basis e_0..e_{n-1} (printed 1-based).
/// Only pairs i < j are stored; [e_j, e_i] = -[e_i, e_j].
class LieAlgebra {
 public:
  using Brackets = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  /// Validates indices and the flavor invariant against `weights`.
  /// Pairs with i > j are folded in with a sign flip; i == j is rejected.
  LieAlgebra(std::string name, std::vector<int> weights, Flavor flavor, Brackets brackets);

  /// Weights 1..n, graded flavor, no brackets.
  static LieAlgebra abelian(std::size_t n);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return weights_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  Flavor flavor() const { return flavor_; }
  const Brackets& brackets() const { return brackets_; }

  /// [e_i, e_j] for any ordered pair.
  SparseVector bracket_basis(std::size_t i, std::size_t j) const;
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// For every k, the pairs (i<j) with a nonzero coefficient on e_k.
  struct DualTerm {
    std::size_t i, j;
    Rational c;
  };
  const std::vector<std::vector<DualTerm>>& dual() const { return dual_; }

  LieAlgebra renamed(std::string name) const;
  LieAlgebra with_flavor(Flavor flavor) const;

  /// Structure constants only; names, weights and flavor are ignored.
  bool same_constants(const LieAlgebra& other) const;
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  std::string name_;
  std::vector<int> weights_;
  Flavor flavor_;
  Brackets brackets_;
  std::vector<std::vector<DualTerm>> dual_;
};

/// Highest flavor (graded over filtered over plain) whose invariant the
/// constants satisfy under `weights`.
Flavor strongest_flavor(const std::vector<int>& weights, const LieAlgebra::Brackets& brackets);

SparseVector bracket(const LieAlgebra& g, const SparseVector& x, const SparseVector& y);

struct JacobiFailure {
  std::size_t i, j, k;
  SparseVector residual;
};
std::vector<JacobiFailure> jacobi_residual(const LieAlgebra& g);

/// Nested subspaces; spaces[k] is level k + 1. Consecutive levels may coincide.
struct Flag {
  std::vector<LinearSubspace> spaces;

  std::vector<std::size_t> dims() const;
  void validate() const;
};

Flag lower_central_series(const LieAlgebra& g);
/// Nil-index s with C^{s+1} = 0, or nullopt when the series stalls above zero.
std::optional<std::size_t> nil_index(const LieAlgebra& g);
bool is_filiform(const LieAlgebra& g);
LinearSubspace center(const LieAlgebra& g);

/// Level k = span{e_i : weight(e_i) >= k}.
Flag weight_flag(const LieAlgebra& g);
/// Level j = span(e_j, ..., e_n).
Flag basis_flag(std::size_t n);

/// Graded algebra on the successive quotients, basis chosen from each
/// level's reduced basis. Throws PreconditionFailed if [F^k, F^l] is not in F^{k+l}.
LieAlgebra associated_graded(const LieAlgebra& g, const Flag& f);

/// Lower-triangular change of basis; column i is the image of e_i.
class BasisChange {
 public:
  explicit BasisChange(std::vector<Vector> columns);
  static BasisChange identity(std::size_t n);
  static BasisChange diagonal(std::size_t n, const Rational& alpha);

  std::size_t dim() const { return columns_.size(); }
  const std::vector<Vector>& columns() const { return columns_; }
  const Rational& alpha() const { return columns_[0][0]; }
  Rational entry(std::size_t row, std::size_t col) const { return columns_[col][row]; }
  bool is_identity() const;

  SparseVector apply(const SparseVector& v) const;
  BasisChange inverse() const;
  /// (this * other)(v) = this(other(v))
  BasisChange compose(const BasisChange& other) const;

  friend bool operator==(const BasisChange&, const BasisChange&) = default;

 private:
  std::vector<Vector> columns_;
};

/// [x, y]' = phi^{-1} [phi x, phi y]. The flavor is kept when the new constants
/// allow it and weakened otherwise.
LieAlgebra apply_basis_change(const LieAlgebra& g, const BasisChange& phi);

}  // namespace filiform
