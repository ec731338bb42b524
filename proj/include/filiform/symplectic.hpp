#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "filiform/cochain.hpp"
#include "filiform/lie_algebra.hpp"

namespace filiform {

bool is_closed(const LieAlgebra& g, const TwoForm& omega);
/// skew_determinant of the Gram matrix is nonzero; false in odd dimension.
bool nondegenerate(const LieAlgebra& g, const TwoForm& omega);
inline bool is_symplectic(const LieAlgebra& g, const TwoForm& omega) {
  return is_closed(g, omega) && nondegenerate(g, omega);
}

/// (phi^* omega)(x, y) = omega(phi x, phi y).
TwoForm pullback(const TwoForm& omega, const BasisChange& phi);

enum class Verdict { exists, certified_none, undecided };
std::string to_string(Verdict v);

struct SymplecticDecision {
  Verdict verdict = Verdict::undecided;
  std::optional<TwoForm> witness;  // closed and nondegenerate
  std::string certificate;
  std::size_t cocycles = 0;  // dim Z^2
  std::size_t trials = 0;    // random combinations tried
};

/// Basis of the closed 2-forms Z^2(g).
std::vector<TwoForm> closed_two_forms(const LieAlgebra& g);

/// CertifiedNone when every closed 2-form vanishes on the center; otherwise
/// tries `trials` combinations of the Z^2 basis with coefficients in -3..3.
SymplecticDecision symplectic_decision(const LieAlgebra& g, std::uint64_t seed = 0, std::size_t trials = 64);

/// [x, y]' = [x, y] + c(x, y) e_{n+1}. The new vector gets the largest weight
/// w_i + w_j over the terms of c (1 for c = 0); the result is graded when g is
/// graded and c homogeneous, and filtered otherwise.
LieAlgebra central_extension(const LieAlgebra& g, const TwoForm& c);

/// For filiform g with center span(xi): x -> c(x, xi) is nonzero.
bool extension_filiform_check(const LieAlgebra& g, const TwoForm& c);

/// theta ^ (d theta)^k != 0 in dimension 2k + 1.
bool contact_check(const LieAlgebra& g, const Cochain& theta);

}  // namespace filiform
