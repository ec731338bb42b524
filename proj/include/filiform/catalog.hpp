#pragma once

#include <array>
#include <string>

#include "filiform/cochain.hpp"
#include "filiform/lie_algebra.hpp"

namespace filiform::catalog {

/// [e_1, e_i] = e_{i+1}.
LieAlgebra m0(std::size_t n);
/// m0(2k) plus [e_j, e_{2k+1-j}] = (-1)^{j+1} e_{2k}; weights (1, 1, 2, ..., 2k-1).
LieAlgebra m1(std::size_t n);
/// m0(n) plus [e_2, e_j] = e_{j+2}.
LieAlgebra m2(std::size_t n);
/// [e_i, e_j] = (j - i) e_{i+j}, i + j <= n.
LieAlgebra V(std::size_t n);
/// One-parameter families in dimensions 8 and 10. Only the rational
/// exclusions are checked: the two cubic exclusions of the 10-dimensional
/// family have no rational roots.
LieAlgebra g8(const Rational& alpha);
LieAlgebra g10(const Rational& alpha);

using Quadruple = std::array<Rational, 4>;
using Quintuple = std::array<Rational, 5>;

/// Filtered deformation of V(2k) for 2k >= 16 even, built row by row. The
/// corrections of coordinate x_a land on e_{i+j+w_a} with w_a = 2k - 11 + a.
LieAlgebra gX(std::size_t n, const Quadruple& x);

enum class Poly { P1, P2, P3, Q1, Q2, Q3, Z1, Z2, Z3, Z4 };
std::string to_string(Poly p);
Poly parse_poly(const std::string& name);
Rational poly(Poly family, long j);

/// g5 = e^2^e^3, g7 = e^2^e^5 - 3 e^3^e^4.
TwoForm g5(std::size_t n);
TwoForm g7(std::size_t n);
/// 2 e^2^e^3^e^7 - 5 e^2^e^4^e^6 + 20 e^3^e^4^e^5.
Cochain g12(std::size_t n);

/// Forms xi_1..xi_4 of weights 8..11 in Lambda^2(e^2, ..., e^n) that push
/// e_j (x) g7 + sum_p e_{j+p} (x) xi_p to a cocycle modulo e_{j+5}.
std::array<TwoForm, 4> xi_forms(std::size_t n, long j);

/// Basic adjoint cocycle of weight n - l, l in 7..11, n >= 12.
Cochain psi(std::size_t n, int l);

/// sum_{i<j, i+j=m} (j - i) e^i^e^j restricted to i, j > m - n - 1,
/// for m in {n+1, n+2, n+3}.
TwoForm omega_proj(std::size_t n, std::size_t m);

/// Symplectic form listed for a catalog algebra: "m0", "V" (any even n >= 4),
/// "g8" and "g10" (alpha required).
TwoForm omega_catalog(const std::string& name, std::size_t n, const std::optional<Rational>& alpha = std::nullopt);

/// Omega_{2k,l} pieces and the full form Omega_{X,x5} on gX(2k, X).
TwoForm omega_piece(std::size_t n, int l);
TwoForm omega_X(std::size_t n, const Quadruple& x, const Rational& x5);

}  // namespace filiform::catalog
