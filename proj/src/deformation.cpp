#include "filiform/deformation.hpp"

#include <algorithm>

#include "filiform/catalog.hpp"
#include "filiform/cohomology.hpp"

namespace filiform {

Deformation Deformation::from_cochain(const Cochain& c, const std::vector<int>& weights) {
  if (!c.is_adjoint() || c.degree() != 2) throw PreconditionFailed("a deformation is an adjoint 2-cochain");
  Deformation d;
  d.n = c.dim();
  for (auto& [l, part] : c.split_by_weight(weights)) {
    if (l <= 0) throw PreconditionFailed("deformation component of weight " + std::to_string(l) + " is not positive");
    d.components.emplace(l, std::move(part));
  }
  return d;
}

Cochain Deformation::total() const {
  Cochain c(n, 2, Coefficients::adjoint);
  for (const auto& [l, part] : components) c.add(part);
  return c;
}

Cochain Deformation::component(int l) const {
  auto it = components.find(l);
  return it == components.end() ? Cochain(n, 2, Coefficients::adjoint) : it->second;
}

bool ModuliPoint::is_zero() const {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
}

Deformation moduli_deformation(const ModuliPoint& p) {
  Cochain c(p.n, 2, Coefficients::adjoint);
  for (int i = 0; i < 5; ++i)
    if (p.x[i] != 0) c.add(catalog::psi(p.n, 11 - i), p.x[i]);
  std::vector<int> w(p.n);
  for (std::size_t i = 0; i < p.n; ++i) w[i] = static_cast<int>(i) + 1;
  return Deformation::from_cochain(c, w);
}

namespace {

// a o b: insert b into the arguments of a.
void compose(const Cochain& a, const Cochain& b, const Rational& factor, Cochain& out) {
  for (const auto& [ma, va] : a.terms()) {
    for (const auto& [mb, vb] : b.terms()) {
      std::uint32_t bit = std::uint32_t{1} << mb.target;
      if (!(ma.args & bit)) continue;
      std::uint32_t rest = ma.args & ~bit;
      int s = merge_sign(mb.args, rest);
      if (s == 0) continue;
      if (std::popcount(ma.args & (bit - 1)) % 2 == 1) s = -s;
      out.add(Monomial{mb.args | rest, ma.target}, s * factor * va * vb);
    }
  }
}

LieAlgebra deform_unchecked(const LieAlgebra& g0, const Cochain& psi, std::string name) {
  auto brackets = g0.brackets();
  for (const auto& [m, v] : psi.terms()) {
    auto idx = m.indices();
    brackets[{idx[0], idx[1]}].add_scaled(SparseVector::unit(static_cast<std::size_t>(m.target)), v);
  }
  for (auto it = brackets.begin(); it != brackets.end();) it = it->second.empty() ? brackets.erase(it) : std::next(it);
  Flavor f = std::max(strongest_flavor(g0.weights(), brackets), g0.flavor());
  return LieAlgebra(std::move(name), g0.weights(), f, std::move(brackets));
}

std::vector<Monomial> monomials_from(const LieAlgebra& g, int q, int min_weight) {
  std::vector<Monomial> out;
  for (const auto& [w, block] : monomials_by_weight(g, q, Coefficients::adjoint))
    if (w >= min_weight) out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Cochain nr_bracket(const Cochain& a, const Cochain& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("bracket of cochains on different algebras");
  if (!a.is_adjoint() || !b.is_adjoint()) throw PreconditionFailed("bracket needs adjoint cochains");
  const int p = a.degree(), q = b.degree();
  if (p + q == 0) throw PreconditionFailed("bracket of two vectors");
  Cochain out(a.dim(), p + q - 1, Coefficients::adjoint);
  compose(a, b, Rational(1), out);
  compose(b, a, Rational(((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1), out);
  return out;
}

std::map<int, Cochain> deformation_residual(const LieAlgebra& g0, const Deformation& psi) {
  if (psi.n != g0.dim()) throw DimensionMismatch("deformation and algebra dimensions differ");
  Cochain total = psi.total();
  Cochain r = differential(g0, total);
  r.add(nr_bracket(total, total), Rational(1, 2));
  return r.split_by_weight(g0.weights());
}

LieAlgebra deform(const LieAlgebra& g0, const Deformation& psi) {
  auto residual = deformation_residual(g0, psi);
  if (!residual.empty())
    throw PreconditionFailed("deformation equation fails at weight " + std::to_string(residual.begin()->first));
  return deform_unchecked(g0, psi.total(), g0.name() + "+Psi");
}

Deformation extract_deformation(const LieAlgebra& g, const LieAlgebra& g0) {
  if (g.dim() != g0.dim()) throw DimensionMismatch("algebras of different dimension");
  if (g.weights() != g0.weights()) throw PreconditionFailed("algebras with different weights");
  Cochain c(g.dim(), 2, Coefficients::adjoint);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      auto diff = g.bracket_basis(i, j) - g0.bracket_basis(i, j);
      for (const auto& [k, v] : diff.entries())
        c.add(Monomial::of({i, j}, static_cast<int>(k)), v);
    }
  return Deformation::from_cochain(c, g0.weights());
}

bool ObstructionClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Rational& v) { return v == 0; });
}

ObstructionClass massey_obstruction(const LieAlgebra& g0, const Deformation& partial, int k) {
  if (g0.flavor() != Flavor::graded) throw PreconditionFailed("obstructions need a graded base algebra");
  if (partial.n != g0.dim()) throw DimensionMismatch("deformation and algebra dimensions differ");
  if (k < 2) throw PreconditionFailed("obstruction weight must be at least 2");
  for (const auto& [l, part] : partial.components)
    if (l >= k) throw PreconditionFailed("partial deformation has a component of weight " + std::to_string(l));
  for (const auto& [l, r] : deformation_residual(g0, partial))
    if (l < k) throw PreconditionFailed("deformation equation fails at weight " + std::to_string(l));

  ObstructionClass out;
  out.weight = k;
  out.representative = Cochain(g0.dim(), 3, Coefficients::adjoint);
  for (int m = 1; m < k; ++m) {
    auto a = partial.components.find(m), b = partial.components.find(k - m);
    if (a == partial.components.end() || b == partial.components.end()) continue;
    out.representative.add(nr_bracket(a->second, b->second), Rational(-1, 2));
  }
  if (!is_cocycle(g0, out.representative)) throw PreconditionFailed("obstruction cochain is not closed");

  CohomologyOptions options;
  options.representatives = true;
  options.weight = k;
  auto report = cohomology(g0, 3, Coefficients::adjoint, options);
  std::vector<Cochain> reps;
  for (const auto& b : report.blocks) reps = b.representatives;
  if (reps.empty()) return out;

  auto target = block_monomials(g0, 3, Coefficients::adjoint, k);
  auto source = block_monomials(g0, 2, Coefficients::adjoint, k);
  std::vector<SparseVector> columns;
  for (const auto& r : reps) columns.push_back(coordinates(r, target));
  for (const auto& m : source) {
    Cochain c(g0.dim(), 2, Coefficients::adjoint);
    c.add(m, Rational(1));
    columns.push_back(coordinates(differential(g0, c), target));
  }
  auto matrix = SparseMatrix(target.size(), columns).transpose();
  auto x = solve(matrix, coordinates(out.representative, target));
  if (!x) throw Error("obstruction class not expressible in the cohomology basis");
  out.coordinates.assign(reps.size(), Rational(0));
  for (const auto& [i, v] : x->entries())
    if (i < reps.size()) out.coordinates[i] = v;
  return out;
}

Canonical canonicalize(const Deformation& psi) {
  const std::size_t n = psi.n;
  if (n < 16) throw PreconditionFailed("canonicalize needs n >= 16: extra weight-1 cohomology (n < 16) is unsupported");
  const LieAlgebra v = catalog::V(n);
  if (!deformation_residual(v, psi).empty()) throw PreconditionFailed("input does not satisfy the deformation equation");

  Canonical out;
  out.point.n = n;
  out.composed = BasisChange::identity(n);
  Deformation current = psi;
  const int top = static_cast<int>(n) - 3;
  for (int l = 1; l <= top; ++l) {
    Cochain part = current.component(l);
    const int m = static_cast<int>(n) - l;  // psi_{n,m} has weight l
    const bool special = m >= 7 && m <= 11;
    if (part.empty()) continue;

    auto source = block_monomials(v, 1, Coefficients::adjoint, l);
    auto target = block_monomials(v, 2, Coefficients::adjoint, l);
    std::vector<SparseVector> columns;
    for (const auto& mono : source) {
      Cochain c(n, 1, Coefficients::adjoint);
      c.add(mono, Rational(1));
      columns.push_back(coordinates(differential(v, c), target));
    }
    Cochain basic(n, 2, Coefficients::adjoint);
    if (special) {
      basic = catalog::psi(n, m);
      columns.push_back(coordinates(basic, target));
    }
    auto matrix = SparseMatrix(target.size(), columns).transpose();
    auto sol = solve(matrix, coordinates(part, target));
    if (!sol) throw PreconditionFailed("canonicalization step at weight " + std::to_string(l) + " is unsolvable");

    Rational x = 0;
    std::vector<Vector> cols(n, Vector(n, Rational(0)));
    for (std::size_t a = 0; a < n; ++a) cols[a][a] = 1;
    bool changed = false;
    for (const auto& [i, c] : sol->entries()) {
      if (i == source.size()) {
        x = c;
        continue;
      }
      const auto& mono = source[i];
      cols[static_cast<std::size_t>(std::countr_zero(mono.args))][static_cast<std::size_t>(mono.target)] += c;
      changed = true;
    }
    if (special) out.point.x[static_cast<std::size_t>(11 - m)] = x;
    if (!changed) continue;

    BasisChange phi(std::move(cols));
    auto g = apply_basis_change(deform_unchecked(v, current.total(), "step"), phi);
    current = extract_deformation(g, v);
    Cochain expected(n, 2, Coefficients::adjoint);
    if (special) expected.add(basic, x);
    if (!(current.component(l) == expected)) throw Error("canonicalization step at weight " + std::to_string(l) + " did not cancel");
    out.trail.push_back(phi);
    out.composed = out.composed.compose(phi);
  }
  return out;
}

std::optional<OrbitAnswer> orbit_equivalent(const ModuliPoint& p, const ModuliPoint& q) {
  if (p.n != q.n) throw DimensionMismatch("moduli points of different dimension");
  for (std::size_t i = 0; i < 5; ++i)
    if ((p.x[i] == 0) != (q.x[i] == 0)) return std::nullopt;
  if (p.is_zero()) return OrbitAnswer{true, {}};
  std::size_t i0 = 0;
  while (p.x[i0] == 0) ++i0;
  OrbitAnswer out;
  for (const auto& alpha : rational_roots(q.x[i0] / p.x[i0], p.weight(i0))) {
    bool ok = true;
    for (std::size_t i = 0; i < 5 && ok; ++i) ok = pow(alpha, p.weight(i)) * p.x[i] == q.x[i];
    if (ok) out.alphas.push_back(alpha);
  }
  if (out.alphas.empty()) return std::nullopt;
  std::sort(out.alphas.begin(), out.alphas.end());
  return out;
}

namespace {

ModuliPoint scaled(const ModuliPoint& p, const Rational& alpha) {
  ModuliPoint q = p;
  for (std::size_t i = 0; i < 5; ++i) q.x[i] = pow(alpha, p.weight(i)) * p.x[i];
  return q;
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

ModuliPoint moduli_normal_form(const ModuliPoint& p) {
  if (p.is_zero()) return p;
  std::size_t i0 = 0;
  while (p.x[i0] == 0) ++i0;
  const int w = p.weight(i0);
  if (w <= 0) throw PreconditionFailed("moduli coordinate of non-positive weight");
  const Rational& x = p.x[i0];

  std::map<std::uint64_t, long> exponents;
  for (const auto& [prime, e] : factorize(x.get_num()).powers) exponents[prime] += e;
  for (const auto& [prime, e] : factorize(x.get_den()).powers) exponents[prime] -= e;
  Rational alpha = 1;
  for (const auto& [prime, e] : exponents) {
    long shift = -floor_div(e, w);
    Rational base = Integer(std::to_string(prime));
    alpha *= pow(base, shift);
  }
  if (w % 2 == 1) {
    if (x < 0) alpha = -alpha;
    return scaled(p, alpha);
  }
  auto a = scaled(p, alpha), b = scaled(p, -alpha);
  return std::lexicographical_compare(b.x.begin(), b.x.end(), a.x.begin(), a.x.end()) ? b : a;
}

bool nonsingular_classify(const ModuliPoint& p) {
  return std::count_if(p.x.begin(), p.x.end(), [](const Rational& v) { return v != 0; }) <= 1;
}

std::pair<std::size_t, std::size_t> filtered_kernel(const LieAlgebra& g, int q, int min_weight) {
  auto source = monomials_from(g, q, min_weight);
  auto target = monomials_from(g, q + 1, min_weight);
  auto d = differential_matrix(g, source, target, q, Coefficients::adjoint).transpose();
  std::size_t rank = rref(d).rank;
  return {source.size() - rank, source.size()};
}

TangentDims tangent_dims(const Deformation& psi) {
  auto g = deform(catalog::V(psi.n), psi);
  TangentDims t;
  auto [k1, c1] = filtered_kernel(g, 1, 1);
  t.kernel = k1;
  t.orbit = c1 - k1;
  t.cocycles = filtered_kernel(g, 2, 1).first;
  t.stabilizer = filtered_kernel(g, 1, 0).first;
  return t;
}

std::vector<Cochain> stabilizer_kernel_basis(const Deformation& psi) {
  const std::size_t n = psi.n;
  auto g = deform(catalog::V(n), psi);
  std::vector<Cochain> out;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Cochain ad(n, 1, Coefficients::adjoint);
    for (std::size_t a = 0; a < n; ++a)
      for (auto b = g.bracket_basis(k, a); const auto& [t, c] : b.entries()) ad.add(Monomial::of({a}, static_cast<int>(t)), c);
    out.push_back(std::move(ad));
  }
  // printed indices below are 1-based
  auto op = [n](std::vector<std::tuple<std::size_t, std::size_t, Rational>> terms) {
    Cochain c(n, 1, Coefficients::adjoint);
    for (const auto& [t, a, v] : terms) c.add(Monomial::of({a - 1}, static_cast<int>(t - 1)), v);
    return c;
  };
  const long m = static_cast<long>(n);
  out.push_back(op({{n, 2, 1}}));
  out.push_back(op({{n - 1, 2, 1}, {n, 3, Rational(m - 2)}}));
  out.push_back(op({{n - 2, 2, 1}, {n - 1, 3, Rational(m - 3)}, {n, 4, Rational((m - 2) * (m - 3) / 2)}}));
  return out;
}

}  // namespace filiform
