#include "filiform/cochain.hpp"

#include <algorithm>

namespace filiform {

std::string to_string(Coefficients c) { return c == Coefficients::trivial ? "trivial" : "adjoint"; }

Coefficients parse_coefficients(const std::string& text) {
  if (text == "trivial") return Coefficients::trivial;
  if (text == "adjoint") return Coefficients::adjoint;
  throw InputError("unknown coefficient system '" + text + "'");
}

std::vector<std::size_t> Monomial::indices() const {
  std::vector<std::size_t> out;
  for (std::uint32_t m = args; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

Monomial Monomial::of(const std::vector<std::size_t>& sorted_indices, int target) {
  Monomial m;
  m.target = target;
  for (std::size_t k = 0; k < sorted_indices.size(); ++k) {
    if (sorted_indices[k] >= kMaxCochainDim) throw DimensionMismatch("cochain index beyond supported dimension");
    if (k > 0 && sorted_indices[k] <= sorted_indices[k - 1])
      throw PreconditionFailed("monomial indices must be strictly increasing");
    m.args |= std::uint32_t{1} << sorted_indices[k];
  }
  return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.target != b.target) return a.target < b.target;
  if (a.args == b.args) return false;
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  std::uint32_t diff = a.args ^ b.args;
  std::uint32_t lowest = diff & (~diff + 1);
  return (a.args & lowest) != 0;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inversions = 0;
  for (std::uint32_t m = b; m; m &= m - 1) {
    int bit = std::countr_zero(m);
    std::uint32_t above = bit >= 31 ? 0 : ~((std::uint32_t{1} << (bit + 1)) - 1);
    inversions += std::popcount(a & above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Cochain::Cochain(std::size_t n, int degree, Coefficients coefficients)
    : n_(n), degree_(degree), coefficients_(coefficients) {
  if (n > kMaxCochainDim) throw DimensionMismatch("cochains support dimension at most 32");
  if (degree < 0) throw PreconditionFailed("negative cochain degree");
}

Cochain Cochain::form(std::size_t n, int degree,
                      const std::vector<std::pair<std::vector<std::size_t>, Rational>>& terms) {
  Cochain c(n, degree, Coefficients::trivial);
  for (const auto& [idx, value] : terms) {
    if (static_cast<int>(idx.size()) != degree) throw PreconditionFailed("form term has the wrong degree");
    for (auto i : idx)
      if (i >= n) throw DimensionMismatch("form index out of range");
    c.add(Monomial::of(idx), value);
  }
  return c;
}

Cochain Cochain::tensor(std::size_t target, const Cochain& f) {
  if (f.is_adjoint()) throw PreconditionFailed("tensor expects a trivial form");
  if (target >= f.n_) throw DimensionMismatch("tensor target out of range");
  Cochain c(f.n_, f.degree_, Coefficients::adjoint);
  for (const auto& [m, v] : f.terms_) c.terms_.emplace(Monomial{m.args, static_cast<int>(target)}, v);
  return c;
}

Cochain Cochain::vector(std::size_t n, std::size_t target) {
  Cochain c(n, 0, Coefficients::adjoint);
  c.add(Monomial{0, static_cast<int>(target)}, Rational(1));
  return c;
}

Rational Cochain::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Cochain::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.degree() != degree_) throw PreconditionFailed("monomial degree differs from cochain degree");
  if ((m.target >= 0) != is_adjoint()) throw PreconditionFailed("monomial coefficient system mismatch");
  if (m.target >= static_cast<int>(n_) || (n_ < 32 && (m.args >> n_) != 0))
    throw DimensionMismatch("monomial outside the cochain dimension");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Cochain::check_compatible(const Cochain& other) const {
  if (other.n_ != n_ || other.degree_ != degree_ || other.coefficients_ != coefficients_)
    throw DimensionMismatch("cochains live in different spaces");
}

void Cochain::add(const Cochain& other, const Rational& factor) {
  check_compatible(other);
  if (factor == 0) return;
  for (const auto& [m, v] : other.terms_) add(m, factor * v);
}

namespace {

// Sorts indices into a mask; returns sign of the sorting permutation, 0 on repeats.
int sort_args(const std::vector<std::size_t>& args, std::uint32_t& mask) {
  mask = 0;
  int sign = 1;
  for (auto i : args) {
    if (i >= kMaxCochainDim) throw DimensionMismatch("argument index out of range");
    std::uint32_t bit = std::uint32_t{1} << i;
    if (mask & bit) return 0;
    sign *= merge_sign(mask, bit);
    mask |= bit;
  }
  return sign;
}

}  // namespace

SparseVector Cochain::evaluate(const std::vector<std::size_t>& args) const {
  if (static_cast<int>(args.size()) != degree_) throw PreconditionFailed("wrong number of arguments");
  if (!is_adjoint()) return SparseVector({{0, value(args)}});
  std::uint32_t mask;
  int sign = sort_args(args, mask);
  std::vector<SparseVector::Entry> out;
  if (sign == 0) return {};
  for (const auto& [m, v] : terms_)
    if (m.args == mask) out.emplace_back(static_cast<std::size_t>(m.target), sign * v);
  return SparseVector(std::move(out));
}

Rational Cochain::value(const std::vector<std::size_t>& args) const {
  if (is_adjoint()) throw PreconditionFailed("value() needs trivial coefficients");
  if (static_cast<int>(args.size()) != degree_) throw PreconditionFailed("wrong number of arguments");
  std::uint32_t mask;
  int sign = sort_args(args, mask);
  if (sign == 0) return 0;
  return sign * coefficient(Monomial{mask, -1});
}

int monomial_weight(const Monomial& m, const std::vector<int>& w) {
  int sum = 0;
  for (std::uint32_t a = m.args; a; a &= a - 1) sum += w.at(static_cast<std::size_t>(std::countr_zero(a)));
  return m.target >= 0 ? w.at(static_cast<std::size_t>(m.target)) - sum : sum;
}

std::optional<int> Cochain::weight(const std::vector<int>& w) const {
  std::optional<int> out;
  for (const auto& [m, v] : terms_) {
    int x = monomial_weight(m, w);
    if (out && *out != x) return std::nullopt;
    out = x;
  }
  return out;
}

std::map<int, Cochain> Cochain::split_by_weight(const std::vector<int>& w) const {
  std::map<int, Cochain> out;
  for (const auto& [m, v] : terms_) {
    auto it = out.try_emplace(monomial_weight(m, w), n_, degree_, coefficients_).first;
    it->second.terms_.emplace(m, v);
  }
  return out;
}

std::map<std::size_t, Cochain> Cochain::by_target() const {
  if (!is_adjoint()) throw PreconditionFailed("by_target needs adjoint coefficients");
  std::map<std::size_t, Cochain> out;
  for (const auto& [m, v] : terms_) {
    auto it = out.try_emplace(static_cast<std::size_t>(m.target), n_, degree_, Coefficients::trivial).first;
    it->second.terms_.emplace(Monomial{m.args, -1}, v);
  }
  return out;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  Cochain r = a;
  r.add(b);
  return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  Cochain r = a;
  r.add(b, Rational(-1));
  return r;
}

Cochain operator*(const Rational& c, const Cochain& a) {
  Cochain r(a.dim(), a.degree(), a.coefficients());
  r.add(a, c);
  return r;
}

Cochain wedge(const Cochain& a, const Cochain& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of cochains on different algebras");
  if (a.is_adjoint() && b.is_adjoint()) throw PreconditionFailed("wedge of two adjoint cochains");
  Coefficients co = (a.is_adjoint() || b.is_adjoint()) ? Coefficients::adjoint : Coefficients::trivial;
  Cochain out(a.dim(), a.degree() + b.degree(), co);
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      int s = merge_sign(ma.args, mb.args);
      if (s == 0) continue;
      out.add(Monomial{ma.args | mb.args, std::max(ma.target, mb.target)}, s * va * vb);
    }
  return out;
}

Cochain interior(std::size_t index, const Cochain& c) {
  if (index >= c.dim()) throw DimensionMismatch("interior index out of range");
  if (c.degree() == 0) throw PreconditionFailed("interior product of a 0-cochain");
  Cochain out(c.dim(), c.degree() - 1, c.coefficients());
  std::uint32_t bit = std::uint32_t{1} << index;
  for (const auto& [m, v] : c.terms()) {
    if (!(m.args & bit)) continue;
    int below = std::popcount(m.args & (bit - 1));
    out.add(Monomial{m.args & ~bit, m.target}, below % 2 == 0 ? v : Rational(-v));
  }
  return out;
}

SparseVector coordinates(const Cochain& c, const std::vector<Monomial>& basis) {
  std::vector<SparseVector::Entry> out;
  for (const auto& [m, v] : c.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m)) throw PreconditionFailed("cochain term outside the monomial block");
    out.emplace_back(static_cast<std::size_t>(it - basis.begin()), v);
  }
  return SparseVector(std::move(out));
}

Cochain from_coordinates(const SparseVector& v, const std::vector<Monomial>& basis, std::size_t n, int degree,
                         Coefficients coefficients) {
  Cochain c(n, degree, coefficients);
  for (const auto& [i, x] : v.entries()) c.add(basis.at(i), x);
  return c;
}

TwoForm two_form(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& terms) {
  Cochain c(n, 2, Coefficients::trivial);
  for (const auto& [i, j, v] : terms) {
    if (i >= n || j >= n) throw DimensionMismatch("two-form index out of range");
    if (i == j) throw PreconditionFailed("two-form term e^i ^ e^i");
    if (i < j)
      c.add(Monomial::of({i, j}), v);
    else
      c.add(Monomial::of({j, i}), -v);
  }
  return c;
}

SparseMatrix gram_matrix(const TwoForm& omega) {
  if (omega.is_adjoint() || omega.degree() != 2) throw PreconditionFailed("gram matrix needs a trivial two-form");
  const std::size_t n = omega.dim();
  SparseMatrix m(n, n);
  for (const auto& [mono, v] : omega.terms()) {
    auto idx = mono.indices();
    m.add(idx[0], idx[1], v);
    m.add(idx[1], idx[0], -v);
  }
  return m;
}

}  // namespace filiform
