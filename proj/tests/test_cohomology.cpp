#include <gtest/gtest.h>

#include "filiform/catalog.hpp"
#include "filiform/cohomology.hpp"
#include "support.hpp"

using namespace filiform;

namespace {

std::vector<int> weights_of(const CohomologyReport& r) { return r.weight_multiset(); }

}  // namespace

TEST(Differential, LowDegreeConventions) {
  auto v = catalog::V(6);
  auto e3 = Cochain::form(6, 1, {{{2}, Rational(1)}});
  EXPECT_EQ(differential(v, e3), Cochain::form(6, 2, {{{0, 1}, Rational(1)}}));
  // (d e_j)(e_1) = (1 - j) e_{j+1}
  for (std::size_t j = 1; j < 5; ++j) {
    auto dv = differential(v, Cochain::vector(6, j));
    EXPECT_EQ(dv.evaluate({0}), SparseVector({{j + 1, Rational(-static_cast<long>(j))}}));
  }
  // d of the center vector vanishes
  EXPECT_TRUE(differential(v, Cochain::vector(6, 5)).empty());
}

TEST(Differential, SquaresToZero) {
  std::mt19937_64 rng(3);
  std::vector<LieAlgebra> algebras = {catalog::V(9), catalog::m2(8), catalog::g8(Rational(3)),
                                      catalog::gX(16, {Rational(1), Rational(2), Rational(-1), Rational(3)})};
  for (const auto& g : algebras)
    for (auto co : {Coefficients::trivial, Coefficients::adjoint})
      for (int q = 0; q <= 3; ++q) {
        auto c = support::random_cochain(rng, g.dim(), q, co, 6);
        EXPECT_TRUE(differential(g, differential(g, c)).empty()) << g.name() << " q=" << q;
      }
}

TEST(Differential, TrivialOneFormsEvaluateOnBrackets) {
  auto g = catalog::g10(Rational(2));
  std::mt19937_64 rng(5);
  auto f = support::random_cochain(rng, 10, 1, Coefficients::trivial, 8);
  auto df = differential(g, f);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      Rational expected = 0;
      for (auto b = g.bracket_basis(i, j); const auto& [k, c] : b.entries()) expected += c * f.value({k});
      EXPECT_EQ(df.value({i, j}), expected);
    }
}

TEST(Cohomology, TrivialDegreeTwoOfV) {
  for (std::size_t n : {12, 15, 18}) {
    auto r = cohomology(catalog::V(n), 2, Coefficients::trivial);
    EXPECT_EQ(weights_of(r), (std::vector<int>{5, 7, static_cast<int>(n) + 1})) << n;
  }
  auto h1 = cohomology(catalog::V(12), 1, Coefficients::trivial);
  EXPECT_EQ(weights_of(h1), (std::vector<int>{1, 2}));
}

// Expected multisets come from a separate script that evaluates the textbook
// formula for d on basis tuples and takes ranks modulo 2^61 - 1. Neither it nor
// this engine finds a class of weight -4.
TEST(Cohomology, AdjointDegreeTwoOfV) {
  auto r12 = cohomology(catalog::V(12), 2, Coefficients::adjoint);
  EXPECT_EQ(weights_of(r12), (std::vector<int>{-3, -2, -2, -1, 1, 2, 3, 4, 5}));
  auto r14 = cohomology(catalog::V(14), 2, Coefficients::adjoint);
  EXPECT_EQ(weights_of(r14), (std::vector<int>{-3, -2, -2, -1, 1, 3, 4, 5, 6, 7}));
  auto r16 = cohomology(catalog::V(16), 2, Coefficients::adjoint);
  EXPECT_EQ(weights_of(r16), (std::vector<int>{-3, -2, -2, -1, 5, 6, 7, 8, 9}));
}

TEST(Cohomology, AdjointLowDegreesOfV) {
  for (std::size_t n : {12, 16}) {
    const int m = static_cast<int>(n);
    EXPECT_EQ(weights_of(cohomology(catalog::V(n), 0, Coefficients::adjoint)), (std::vector<int>{m}));
    EXPECT_EQ(weights_of(cohomology(catalog::V(n), 1, Coefficients::adjoint)),
              (std::vector<int>{0, m - 4, m - 3, m - 2}));
  }
}

TEST(Cohomology, BlockRankMatchesKernel) {
  auto v = catalog::V(12);
  auto d = differential_matrix(v, 2, -2, Coefficients::adjoint);
  auto block = cohomology(v, 2, Coefficients::adjoint, {false, -2, true}).blocks.at(0);
  EXPECT_EQ(block.cochains, d.cols());
  EXPECT_EQ(rref(d).rank, block.cochains - block.cocycles);
  EXPECT_EQ(block.dim(), 2u);
}

TEST(Cohomology, RepresentativesAreIndependentCocycles) {
  auto v = catalog::V(10);
  CohomologyOptions options;
  options.representatives = true;
  auto r = cohomology(v, 2, Coefficients::trivial, options);
  for (const auto& b : r.blocks) {
    ASSERT_EQ(b.representatives.size(), b.dim());
    for (const auto& c : b.representatives) {
      EXPECT_TRUE(is_cocycle(v, c));
      EXPECT_FALSE(coboundary_preimage(v, c).has_value());
    }
  }
}

TEST(Cohomology, NonGradedAlgebrasUseOneBlock) {
  auto g = catalog::m2(7);
  auto r = cohomology(g.with_flavor(Flavor::plain), 1, Coefficients::trivial);
  ASSERT_EQ(r.blocks.size(), 1u);
  EXPECT_FALSE(r.blocks[0].weight.has_value());
  EXPECT_EQ(r.total(), 2u);
  EXPECT_THROW(cohomology(g.with_flavor(Flavor::plain), 1, Coefficients::trivial, {false, 1, false}),
               PreconditionFailed);
}

TEST(Cohomology, CoboundaryPreimage) {
  std::mt19937_64 rng(9);
  auto v = catalog::V(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = support::random_cochain(rng, 11, 1, Coefficients::adjoint, 5);
    auto c = differential(v, f);
    auto pre = coboundary_preimage(v, c);
    ASSERT_TRUE(pre.has_value());
    EXPECT_EQ(differential(v, *pre), c);
  }
  EXPECT_FALSE(coboundary_preimage(catalog::V(14), catalog::psi(14, 9)).has_value());
  // the weight -4 block is exact
  auto v12 = catalog::V(12);
  for (const auto& m : block_monomials(v12, 2, Coefficients::adjoint, -4)) {
    Cochain c(12, 2, Coefficients::adjoint);
    c.add(m, Rational(1));
    auto dc = differential(v12, c);
    if (dc.empty()) EXPECT_TRUE(coboundary_preimage(v12, c).has_value());
  }
}

TEST(Cohomology, MonomialsGroupByWeight) {
  auto v = catalog::V(5);
  auto blocks = monomials_by_weight(v, 1, Coefficients::adjoint);
  EXPECT_EQ(blocks.at(0).size(), 5u);
  EXPECT_EQ(blocks.at(4).size(), 1u);
  EXPECT_EQ(blocks.at(-4).size(), 1u);
  std::size_t total = 0;
  for (const auto& [w, b] : monomials_by_weight(v, 2, Coefficients::trivial)) total += b.size();
  EXPECT_EQ(total, 10u);
}
