#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "filiform/rational.hpp"
#include "filiform/sparse.hpp"

namespace filiform {

enum class Coefficients { trivial, adjoint };

std::string to_string(Coefficients c);
Coefficients parse_coefficients(const std::string& text);

/// Largest dimension a cochain can address (argument sets are bit masks).
inline constexpr std::size_t kMaxCochainDim = 32;

/// e^I for trivial coefficients (target < 0), e_target (x) e^I otherwise.
/// I is stored as a bit mask over 0-based indices.
struct Monomial {
  std::uint32_t args = 0;
  int target = -1;

  int degree() const { return std::popcount(args); }
  std::vector<std::size_t> indices() const;
  static Monomial of(const std::vector<std::size_t>& sorted_indices, int target = -1);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Target first, then argument tuples lexicographically (smaller degree first).
bool operator<(const Monomial& a, const Monomial& b);

/// (-1)^{number of pairs a in A, b in B with a > b}; 0 when A and B overlap.
int merge_sign(std::uint32_t a, std::uint32_t b);

/// Sparse alternating q-linear map on an n-dimensional algebra.
class Cochain {
 public:
  using Terms = std::map<Monomial, Rational>;

  Cochain(std::size_t n, int degree, Coefficients coefficients);

  /// Trivial-coefficient q-form from (sorted 0-based indices, coefficient) pairs.
  static Cochain form(std::size_t n, int degree, const std::vector<std::pair<std::vector<std::size_t>, Rational>>& terms);
  /// e_target (x) f for a trivial form f.
  static Cochain tensor(std::size_t target, const Cochain& f);
  /// The basis vector e_target as an adjoint 0-cochain.
  static Cochain vector(std::size_t n, std::size_t target);

  std::size_t dim() const { return n_; }
  int degree() const { return degree_; }
  Coefficients coefficients() const { return coefficients_; }
  bool is_adjoint() const { return coefficients_ == Coefficients::adjoint; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  void add(const Monomial& m, const Rational& c);
  void add(const Cochain& other, const Rational& factor = Rational(1));

  /// Value on e_{i1}, ..., e_{iq} (any order, repeats give zero).
  SparseVector evaluate(const std::vector<std::size_t>& args) const;
  /// Same for trivial coefficients.
  Rational value(const std::vector<std::size_t>& args) const;

  /// Weight of every term when all agree: w(target) - sum w(args) for adjoint
  /// coefficients, sum w(args) for trivial ones. nullopt for mixed or empty cochains.
  std::optional<int> weight(const std::vector<int>& w) const;
  std::map<int, Cochain> split_by_weight(const std::vector<int>& w) const;

  /// Trivial form f with this = e_target (x) f summed over targets.
  std::map<std::size_t, Cochain> by_target() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  void check_compatible(const Cochain& other) const;

  std::size_t n_;
  int degree_;
  Coefficients coefficients_;
  Terms terms_;
};

int monomial_weight(const Monomial& m, const std::vector<int>& w);

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Rational& c, const Cochain& a);

/// Exterior product in the determinant convention. At most one factor may be
/// adjoint; its vector part is carried along.
Cochain wedge(const Cochain& a, const Cochain& b);

/// Inserts e_index into the first slot.
Cochain interior(std::size_t index, const Cochain& c);

/// Coordinates of a cochain in an ordered list of monomials.
SparseVector coordinates(const Cochain& c, const std::vector<Monomial>& basis);
Cochain from_coordinates(const SparseVector& v, const std::vector<Monomial>& basis, std::size_t n, int degree,
                         Coefficients coefficients);

/// Two-forms are degree-2 trivial cochains.
using TwoForm = Cochain;
TwoForm two_form(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& terms);
/// Gram matrix omega(e_i, e_j).
SparseMatrix gram_matrix(const TwoForm& omega);

}  // namespace filiform
