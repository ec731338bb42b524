#include "filiform/symplectic.hpp"

#include <random>

#include "filiform/cohomology.hpp"

namespace filiform {

namespace {

void check_form(const LieAlgebra& g, const Cochain& c, int degree) {
  if (c.dim() != g.dim()) throw DimensionMismatch("form and algebra dimensions differ");
  if (c.is_adjoint() || c.degree() != degree) throw PreconditionFailed("expected a trivial " + std::to_string(degree) + "-form");
}

}  // namespace

bool is_closed(const LieAlgebra& g, const TwoForm& omega) {
  check_form(g, omega, 2);
  return differential(g, omega).empty();
}

bool nondegenerate(const LieAlgebra& g, const TwoForm& omega) {
  check_form(g, omega, 2);
  if (g.dim() % 2 == 1) return false;
  return skew_determinant(gram_matrix(omega)) != 0;
}

TwoForm pullback(const TwoForm& omega, const BasisChange& phi) {
  if (omega.dim() != phi.dim()) throw DimensionMismatch("form and basis change dimensions differ");
  const std::size_t n = omega.dim();
  auto gram = gram_matrix(omega);
  std::vector<SparseVector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(gram.multiply(phi.apply(SparseVector::unit(i))));
  TwoForm out(n, 2, Coefficients::trivial);
  for (std::size_t i = 0; i < n; ++i) {
    // gram * phi(e_i) pairs against phi(e_j)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = 0;
      for (auto pj = phi.apply(SparseVector::unit(j)); const auto& [k, c] : pj.entries()) v += c * images[i].at(k);
      out.add(Monomial::of({i, j}), -v);
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exists:
      return "exists";
    case Verdict::certified_none:
      return "certified-none";
    case Verdict::undecided:
      return "undecided";
  }
  return "?";
}

std::vector<TwoForm> closed_two_forms(const LieAlgebra& g) {
  auto source = block_monomials(g, 2, Coefficients::trivial, std::nullopt);
  auto target = block_monomials(g, 3, Coefficients::trivial, std::nullopt);
  auto z = kernel_basis(differential_matrix(g, source, target, 2, Coefficients::trivial));
  std::vector<TwoForm> out;
  for (const auto& v : z.basis()) out.push_back(from_coordinates(v, source, g.dim(), 2, Coefficients::trivial));
  return out;
}

SymplecticDecision symplectic_decision(const LieAlgebra& g, std::uint64_t seed, std::size_t trials) {
  if (g.dim() % 2 == 1) throw PreconditionFailed("symplectic forms need an even dimension");
  if (!jacobi_residual(g).empty()) throw PreconditionFailed("algebra fails Jacobi");
  SymplecticDecision out;
  auto z = closed_two_forms(g);
  out.cocycles = z.size();
  auto centre = center(g);

  bool pairs = false;
  for (const auto& omega : z)
    for (const auto& v : centre.basis()) {
      Cochain contracted(g.dim(), 1, Coefficients::trivial);
      for (const auto& [i, c] : v.entries()) contracted.add(interior(i, omega), c);
      if (!contracted.empty()) pairs = true;
    }
  if (!pairs) {
    out.verdict = Verdict::certified_none;
    out.certificate = "all " + std::to_string(z.size()) + " closed 2-forms vanish on the " +
                      std::to_string(centre.dim()) + "-dimensional center";
    return out;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coefficient(-3, 3);
  for (std::size_t t = 0; t < trials; ++t) {
    TwoForm omega(g.dim(), 2, Coefficients::trivial);
    for (const auto& basis : z) omega.add(basis, Rational(coefficient(rng)));
    out.trials = t + 1;
    if (nondegenerate(g, omega) && is_closed(g, omega)) {
      out.verdict = Verdict::exists;
      out.witness = std::move(omega);
      return out;
    }
  }
  out.verdict = Verdict::undecided;
  return out;
}

LieAlgebra central_extension(const LieAlgebra& g, const TwoForm& c) {
  check_form(g, c, 2);
  if (!is_closed(g, c)) throw PreconditionFailed("extension cocycle is not closed");
  const std::size_t n = g.dim();
  auto weights = g.weights();
  auto homogeneous = c.weight(weights);
  int top = c.empty() ? 1 : monomial_weight(c.terms().begin()->first, weights);
  for (const auto& [m, v] : c.terms()) top = std::max(top, monomial_weight(m, weights));
  weights.push_back(top);
  auto brackets = g.brackets();
  for (const auto& [m, v] : c.terms()) {
    auto idx = m.indices();
    brackets[{idx[0], idx[1]}].add_scaled(SparseVector::unit(n), v);
  }
  Flavor flavor = Flavor::filtered;
  if (g.flavor() == Flavor::plain) flavor = Flavor::plain;
  if (g.flavor() == Flavor::graded && (c.empty() || homogeneous)) flavor = Flavor::graded;
  LieAlgebra out(g.name() + "+ext", std::move(weights), flavor, std::move(brackets));
  if (!jacobi_residual(out).empty()) throw Error("central extension fails Jacobi");
  return out;
}

bool extension_filiform_check(const LieAlgebra& g, const TwoForm& c) {
  check_form(g, c, 2);
  if (!is_filiform(g)) throw PreconditionFailed("extension check needs a filiform algebra");
  auto z = center(g);
  if (z.dim() != 1) throw PreconditionFailed("filiform algebra with a center of dimension " + std::to_string(z.dim()));
  Cochain f(g.dim(), 1, Coefficients::trivial);
  for (const auto& [i, a] : z.basis().front().entries()) f.add(interior(i, c), a);
  return !f.empty();
}

bool contact_check(const LieAlgebra& g, const Cochain& theta) {
  check_form(g, theta, 1);
  if (g.dim() % 2 == 0) throw PreconditionFailed("contact forms need an odd dimension");
  auto dtheta = differential(g, theta);
  Cochain power = theta;
  for (std::size_t k = 0; 2 * k + 1 < g.dim(); ++k) {
    power = wedge(power, dtheta);
    if (power.empty()) return false;
  }
  return !power.empty();
}

}  // namespace filiform
