#pragma once

#include <ostream>
#include <random>

#include "filiform/cochain.hpp"
#include "filiform/lie_algebra.hpp"

namespace filiform::support {

inline Rational small(std::mt19937_64& rng, int range = 3) {
  return Rational(static_cast<long>(rng() % (2 * range + 1)) - range);
}

inline Rational small_nonzero(std::mt19937_64& rng, int range = 3) {
  Rational r = 0;
  while (r == 0) r = small(rng, range);
  return r;
}

// Unipotent lower-triangular change with small entries.
inline BasisChange random_unitriangular(std::mt19937_64& rng, std::size_t n, int density_percent = 40) {
  std::vector<Vector> cols(n, Vector(n, Rational(0)));
  for (std::size_t a = 0; a < n; ++a) {
    cols[a][a] = 1;
    for (std::size_t t = a + 1; t < n; ++t)
      if (static_cast<int>(rng() % 100) < density_percent) cols[a][t] = small(rng);
  }
  return BasisChange(std::move(cols));
}

// Random cochain with about `terms` terms.
inline Cochain random_cochain(std::mt19937_64& rng, std::size_t n, int degree, Coefficients co, int terms) {
  Cochain c(n, degree, co);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t mask = 0;
    while (std::popcount(mask) < degree) mask |= std::uint32_t{1} << (rng() % n);
    int target = co == Coefficients::adjoint ? static_cast<int>(rng() % n) : -1;
    c.add(Monomial{mask, target}, small(rng));
  }
  return c;
}

// Structure constants as the adjoint 2-cochain sum c_ij^k e_k (x) e^i^e^j.
inline Cochain structure_tensor(const LieAlgebra& g) {
  Cochain mu(g.dim(), 2, Coefficients::adjoint);
  for (const auto& [ij, v] : g.brackets())
    for (const auto& [k, c] : v.entries()) mu.add(Monomial::of({ij.first, ij.second}, static_cast<int>(k)), c);
  return mu;
}

inline int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace filiform::support

namespace filiform {

inline void PrintTo(const Cochain& c, std::ostream* os) {
  *os << "{";
  for (const auto& [m, v] : c.terms()) {
    *os << " " << to_string(v);
    if (m.target >= 0) *os << " e" << m.target + 1 << "(x)";
    *os << "e^";
    for (auto i : m.indices()) *os << i + 1 << ".";
  }
  *os << " }";
}

}  // namespace filiform
