#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "filiform/cochain.hpp"
#include "filiform/lie_algebra.hpp"

namespace filiform {

/// Psi = sum_l Psi_l, adjoint 2-cochains keyed by weight l >= 1 (weights of the base algebra).
struct Deformation {
  std::size_t n = 0;
  std::map<int, Cochain> components;

  /// Splits c by weight; throws PreconditionFailed on a component of weight <= 0.
  static Deformation from_cochain(const Cochain& c, const std::vector<int>& weights);
  Cochain total() const;
  Cochain component(int l) const;
  bool empty() const { return components.empty(); }
  friend bool operator==(const Deformation& a, const Deformation& b) { return a.n == b.n && a.components == b.components; }
};

/// Homogeneous coordinates (x_1, ..., x_5) in front of psi_{n,11}, ..., psi_{n,7}.
struct ModuliPoint {
  std::size_t n = 16;
  std::array<Rational, 5> x;

  /// Weight of the 0-based coordinate i: n - 11 + i.
  int weight(std::size_t i) const { return static_cast<int>(n) - 11 + static_cast<int>(i); }
  bool is_zero() const;
  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;
};

/// sum x_i psi_{n,12-i} as a deformation of V(n).
Deformation moduli_deformation(const ModuliPoint& p);

/// For a = e_s (x) e^A and b = e_t (x) e^B:  a o b = e_s (x) (e^B ^ i_{e_t} e^A) and
/// [a, b] = a o b - (-1)^{(p-1)(q-1)} b o a.
Cochain nr_bracket(const Cochain& a, const Cochain& b);

/// d Psi + 1/2 [Psi, Psi] per weight; only nonzero components are kept.
std::map<int, Cochain> deformation_residual(const LieAlgebra& g0, const Deformation& psi);

/// Bracket [,] + Psi. Throws PreconditionFailed when the residual is nonzero.
LieAlgebra deform(const LieAlgebra& g0, const Deformation& psi);
/// Psi with g = deform(g0, Psi). Needs equal dimensions and all differences of positive weight.
Deformation extract_deformation(const LieAlgebra& g, const LieAlgebra& g0);

struct ObstructionClass {
  int weight = 0;
  Cochain representative{0, 3, Coefficients::adjoint};
  Vector coordinates;  // against the H^3 representatives of cohomology(g0, 3, adjoint)

  bool is_zero() const;
};

/// Class of -1/2 sum_{m+l=k} [Psi_m, Psi_l] in H^3_(k). `partial` must only hold
/// weights below k and satisfy the deformation equation there.
ObstructionClass massey_obstruction(const LieAlgebra& g0, const Deformation& partial, int k);

struct Canonical {
  ModuliPoint point;
  std::vector<BasisChange> trail;  // one per weight step that changed the basis
  BasisChange composed = BasisChange::identity(1);
};

/// Brings a Z>0-filtered deformation of V(n), n >= 16, to sum x_i psi_{n,12-i}
/// weight by weight. At weights n-11..n-7 the cocycle psi is split off against
/// B^2 with the psi column placed last.
Canonical canonicalize(const Deformation& psi);

/// Scaling factors alpha with q_i = alpha^{w_i} p_i.
struct OrbitAnswer {
  bool any = false;  // both points zero
  std::vector<Rational> alphas;
};
std::optional<OrbitAnswer> orbit_equivalent(const ModuliPoint& p, const ModuliPoint& q);

/// Representative of the Q*-orbit: the first nonzero coordinate is made free of
/// w-th powers, positive for odd w; for even w the smaller of the two images wins.
ModuliPoint moduli_normal_form(const ModuliPoint& p);

/// At most one nonzero coordinate.
bool nonsingular_classify(const ModuliPoint& p);

struct TangentDims {
  std::size_t kernel = 0;      // ker d_Psi on C^1 of positive weight
  std::size_t orbit = 0;       // rank of the same map
  std::size_t cocycles = 0;    // Z^2 of positive weight
  std::size_t stabilizer = 0;  // ker d_Psi on C^1 of weight >= 0
};
TangentDims tangent_dims(const Deformation& psi);

/// ad(e_1), ..., ad(e_{n-1}) of deform(V(n), psi) and the three tail operators
/// e_n (x) e^2, e_{n-1} (x) e^2 + (n-2) e_n (x) e^3,
/// e_{n-2} (x) e^2 + (n-3) e_{n-1} (x) e^3 + (n-2)(n-3)/2 e_n (x) e^4.
std::vector<Cochain> stabilizer_kernel_basis(const Deformation& psi);

/// Dimension of the kernel of d_g on adjoint q-cochains of weight >= min_weight,
/// and the number of such cochains.
std::pair<std::size_t, std::size_t> filtered_kernel(const LieAlgebra& g, int q, int min_weight);

}  // namespace filiform
