#include "filiform/cohomology.hpp"

#include <algorithm>
#include <set>

#include "filiform/deformation.hpp"

namespace filiform {

namespace {

// d(e^I) for a single argument mask, accumulated into out with a factor.
void trivial_differential(const LieAlgebra& g, std::uint32_t args, int target, const Rational& factor,
                          Cochain& out) {
  int position = 0;
  for (std::uint32_t m = args; m; m &= m - 1, ++position) {
    auto i = static_cast<std::size_t>(std::countr_zero(m));
    std::uint32_t rest = args & ~(std::uint32_t{1} << i);
    for (const auto& term : g.dual()[i]) {
      std::uint32_t pair = (std::uint32_t{1} << term.i) | (std::uint32_t{1} << term.j);
      int s = merge_sign(pair, rest);
      if (s == 0) continue;
      if (position % 2 == 1) s = -s;
      out.add(Monomial{pair | rest, target}, s * factor * term.c);
    }
  }
}

void differential_of(const LieAlgebra& g, const Monomial& m, const Rational& factor, Cochain& out) {
  trivial_differential(g, m.args, m.target, factor, out);
  if (m.target < 0) return;
  const auto t = static_cast<std::size_t>(m.target);
  for (std::size_t a = 0; a < g.dim(); ++a) {
    std::uint32_t bit = std::uint32_t{1} << a;
    int s = merge_sign(bit, m.args);
    if (s == 0) continue;
    for (auto b = g.bracket_basis(t, a); const auto& [k, c] : b.entries())
      out.add(Monomial{bit | m.args, static_cast<int>(k)}, s * factor * c);
  }
}

// All masks with popcount q below 2^n, ascending.
std::vector<std::uint32_t> subsets(std::size_t n, int q) {
  std::vector<std::uint32_t> out;
  if (q < 0 || static_cast<std::size_t>(q) > n) return out;
  if (q == 0) return {0};
  std::uint64_t v = (std::uint64_t{1} << q) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    out.push_back(static_cast<std::uint32_t>(v));
    std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

std::vector<Monomial> all_monomials(const LieAlgebra& g, int q, Coefficients co) {
  std::vector<Monomial> out;
  for (const auto& [w, block] : monomials_by_weight(g, q, co)) out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SparseVector> images(const LieAlgebra& g, const std::vector<Monomial>& source,
                                 const std::vector<Monomial>& target, int q, Coefficients co) {
  std::vector<SparseVector> out;
  out.reserve(source.size());
  for (const auto& m : source) {
    Cochain d(g.dim(), q + 1, co);
    differential_of(g, m, Rational(1), d);
    out.push_back(coordinates(d, target));
  }
  return out;
}

}  // namespace

Cochain differential(const LieAlgebra& g, const Cochain& c) {
  if (c.dim() != g.dim()) throw DimensionMismatch("cochain and algebra dimensions differ");
  Cochain out(g.dim(), c.degree() + 1, c.coefficients());
  for (const auto& [m, v] : c.terms()) differential_of(g, m, v, out);
  return out;
}

std::map<int, std::vector<Monomial>> monomials_by_weight(const LieAlgebra& g, int q, Coefficients co) {
  std::map<int, std::vector<Monomial>> out;
  const std::size_t n = g.dim();
  if (n > kMaxCochainDim) throw DimensionMismatch("cochains support dimension at most 32");
  for (auto mask : subsets(n, q)) {
    Monomial m{mask, -1};
    if (co == Coefficients::trivial) {
      out[monomial_weight(m, g.weights())].push_back(m);
    } else {
      for (std::size_t t = 0; t < n; ++t) {
        m.target = static_cast<int>(t);
        out[monomial_weight(m, g.weights())].push_back(m);
      }
    }
  }
  for (auto& [w, block] : out) std::sort(block.begin(), block.end());
  return out;
}

std::vector<Monomial> block_monomials(const LieAlgebra& g, int q, Coefficients co, std::optional<int> weight) {
  if (!weight) return all_monomials(g, q, co);
  auto blocks = monomials_by_weight(g, q, co);
  auto it = blocks.find(*weight);
  return it == blocks.end() ? std::vector<Monomial>{} : it->second;
}

SparseMatrix differential_matrix(const LieAlgebra& g, const std::vector<Monomial>& source,
                                 const std::vector<Monomial>& target, int q, Coefficients co) {
  return SparseMatrix(target.size(), images(g, source, target, q, co)).transpose();
}

SparseMatrix differential_matrix(const LieAlgebra& g, int q, int weight, Coefficients co) {
  if (g.flavor() != Flavor::graded) throw PreconditionFailed("weight blocks need a graded algebra");
  return differential_matrix(g, block_monomials(g, q, co, weight), block_monomials(g, q + 1, co, weight), q, co);
}

std::size_t CohomologyReport::total() const {
  std::size_t t = 0;
  for (const auto& b : blocks) t += b.dim();
  return t;
}

std::vector<int> CohomologyReport::weight_multiset() const {
  std::vector<int> out;
  for (const auto& b : blocks)
    if (b.weight) out.insert(out.end(), b.dim(), *b.weight);
  return out;
}

namespace {

CohomologyBlock compute_block(const LieAlgebra& g, int q, Coefficients co, std::optional<int> weight,
                              const std::vector<Monomial>& lower, const std::vector<Monomial>& here,
                              const std::vector<Monomial>& upper, bool with_reps) {
  CohomologyBlock block;
  block.weight = weight;
  block.cochains = here.size();
  auto up = images(g, here, upper, q, co);
  SparseMatrix d_here = SparseMatrix(upper.size(), up).transpose();
  auto z = kernel_basis(d_here);
  block.cocycles = z.dim();
  auto down = images(g, lower, here, q - 1, co);
  auto b = LinearSubspace::span(here.size(), down);
  block.coboundaries = b.dim();
  if (with_reps && block.dim() > 0) {
    for (const auto& v : z.basis()) {
      auto r = b.reduce(v);
      if (r.empty()) continue;
      block.representatives.push_back(from_coordinates(r, here, g.dim(), q, co));
      auto gens = b.basis();
      gens.push_back(r);
      b = LinearSubspace::span(here.size(), gens);
    }
  }
  return block;
}

}  // namespace

CohomologyReport cohomology(const LieAlgebra& g, int q, Coefficients co, const CohomologyOptions& options) {
  if (q < 0) throw PreconditionFailed("negative cohomology degree");
  CohomologyReport report;
  report.degree = q;
  report.coefficients = co;
  if (g.flavor() != Flavor::graded) {
    if (options.weight) throw PreconditionFailed("weight blocks need a graded algebra");
    auto block = compute_block(g, q, co, std::nullopt, all_monomials(g, q - 1, co), all_monomials(g, q, co),
                               all_monomials(g, q + 1, co), options.representatives);
    report.blocks.push_back(std::move(block));
    return report;
  }
  auto lower = monomials_by_weight(g, q - 1, co);
  auto here = monomials_by_weight(g, q, co);
  auto upper = monomials_by_weight(g, q + 1, co);
  static const std::vector<Monomial> none;
  auto find = [&](const std::map<int, std::vector<Monomial>>& m, int w) -> const std::vector<Monomial>& {
    auto it = m.find(w);
    return it == m.end() ? none : it->second;
  };
  for (const auto& [w, block_here] : here) {
    if (options.weight && *options.weight != w) continue;
    auto block = compute_block(g, q, co, w, find(lower, w), block_here, find(upper, w), options.representatives);
    if (block.dim() > 0 || options.keep_empty) report.blocks.push_back(std::move(block));
  }
  return report;
}

bool is_cocycle(const LieAlgebra& g, const Cochain& c) { return differential(g, c).empty(); }

std::optional<Cochain> coboundary_preimage(const LieAlgebra& g, const Cochain& c) {
  if (c.dim() != g.dim()) throw DimensionMismatch("cochain and algebra dimensions differ");
  if (c.degree() == 0) {
    if (c.empty()) return Cochain(g.dim(), 0, c.coefficients());
    return std::nullopt;
  }
  if (c.empty()) return Cochain(g.dim(), c.degree() - 1, c.coefficients());
  std::optional<int> weight;
  if (g.flavor() == Flavor::graded) weight = c.weight(g.weights());
  auto source = block_monomials(g, c.degree() - 1, c.coefficients(), weight);

  std::set<Monomial> support;
  for (const auto& [m, v] : c.terms()) support.insert(m);
  for (const auto& m : source) {
    Cochain d(g.dim(), c.degree(), c.coefficients());
    differential_of(g, m, Rational(1), d);
    for (const auto& [t, v] : d.terms()) support.insert(t);
  }
  std::vector<Monomial> target(support.begin(), support.end());
  auto matrix = differential_matrix(g, source, target, c.degree() - 1, c.coefficients());
  auto x = solve(matrix, coordinates(c, target));
  if (!x) return std::nullopt;
  return from_coordinates(*x, source, g.dim(), c.degree() - 1, c.coefficients());
}

Cochain deformed_differential(const LieAlgebra& g0, const Deformation& psi, const Cochain& c) {
  return differential(deform(g0, psi), c);
}

}  // namespace filiform
