#pragma once

#include <map>
#include <optional>
#include <vector>

#include "filiform/cochain.hpp"
#include "filiform/lie_algebra.hpp"

namespace filiform {

struct Deformation;

/// Chevalley-Eilenberg differential. Trivial coefficients: de^k = sum_{i<j} c_ij^k e^i^e^j,
/// extended as an antiderivation, so (df)(x, y) = f([x, y]) on 1-forms. Adjoint coefficients:
///   d(e_t (x) e^I) = e_t (x) d(e^I) + sum_a (e^a ^ e^I) (x) [e_t, e_a],
/// so d c = (-1)^q [mu, c] with mu the structure tensor.
Cochain differential(const LieAlgebra& g, const Cochain& c);

/// Sorted monomials of C^q grouped by weight (trivial weights are sum w(args)).
std::map<int, std::vector<Monomial>> monomials_by_weight(const LieAlgebra& g, int q, Coefficients co);
std::vector<Monomial> block_monomials(const LieAlgebra& g, int q, Coefficients co, std::optional<int> weight);

/// Matrix of d from the span of `source` into the span of `target` (rows).
/// Throws PreconditionFailed when an image leaves the target block.
SparseMatrix differential_matrix(const LieAlgebra& g, const std::vector<Monomial>& source,
                                 const std::vector<Monomial>& target, int q, Coefficients co);
/// The weight block C^q_(mu) -> C^{q+1}_(mu) of a graded algebra.
SparseMatrix differential_matrix(const LieAlgebra& g, int q, int weight, Coefficients co);

struct CohomologyBlock {
  std::optional<int> weight;  // nullopt: the whole complex of a non-graded algebra
  std::size_t cochains = 0;
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t dim() const { return cocycles - coboundaries; }
  std::vector<Cochain> representatives;
};

struct CohomologyReport {
  int degree = 0;
  Coefficients coefficients = Coefficients::trivial;
  std::vector<CohomologyBlock> blocks;  // ascending weight

  std::size_t total() const;
  /// Weights of H with multiplicity, ascending.
  std::vector<int> weight_multiset() const;
};

struct CohomologyOptions {
  bool representatives = false;
  std::optional<int> weight;  // restrict to one weight block
  bool keep_empty = false;    // keep blocks with dim H = 0
};

/// Graded algebras are computed weight by weight; other flavors as one block.
CohomologyReport cohomology(const LieAlgebra& g, int q, Coefficients co, const CohomologyOptions& options = {});

bool is_cocycle(const LieAlgebra& g, const Cochain& c);
/// Some phi with d phi = c, or nullopt. Homogeneous c on a graded algebra is
/// solved inside its weight block.
std::optional<Cochain> coboundary_preimage(const LieAlgebra& g, const Cochain& c);

/// Differential of the algebra deform(g0, psi). Throws PreconditionFailed
/// when psi does not satisfy the deformation equation.
Cochain deformed_differential(const LieAlgebra& g0, const Deformation& psi, const Cochain& c);

}  // namespace filiform
