#include <gtest/gtest.h>

#include "filiform/catalog.hpp"
#include "filiform/lie_algebra.hpp"
#include "support.hpp"

using namespace filiform;

namespace {

LieAlgebra::Brackets one(std::size_t i, std::size_t j, std::size_t k, long c = 1) {
  LieAlgebra::Brackets b;
  b[{i, j}] = SparseVector({{k, Rational(c)}});
  return b;
}

}  // namespace

TEST(LieAlgebra, FlavorNames) {
  for (auto f : {Flavor::graded, Flavor::filtered, Flavor::plain}) EXPECT_EQ(parse_flavor(to_string(f)), f);
  EXPECT_THROW(parse_flavor("smooth"), InputError);
}

TEST(LieAlgebra, ConstructorValidates) {
  EXPECT_THROW(LieAlgebra("x", {1, 2, 3}, Flavor::graded, one(0, 0, 2)), PreconditionFailed);
  EXPECT_THROW(LieAlgebra("x", {1, 2, 3}, Flavor::graded, one(0, 1, 3)), DimensionMismatch);
  // weight 1 + 2 lands on weight 3 only
  EXPECT_NO_THROW(LieAlgebra("x", {1, 2, 3}, Flavor::graded, one(0, 1, 2)));
  EXPECT_THROW(LieAlgebra("x", {1, 1, 3}, Flavor::graded, one(0, 1, 2)), PreconditionFailed);
  EXPECT_NO_THROW(LieAlgebra("x", {1, 1, 3}, Flavor::filtered, one(0, 1, 2)));
  EXPECT_NO_THROW(LieAlgebra("x", {1, 2, 4}, Flavor::filtered, one(0, 1, 2)));
  EXPECT_THROW(LieAlgebra("x", {1, 2, 2}, Flavor::filtered, one(0, 1, 2)), PreconditionFailed);
  EXPECT_NO_THROW(LieAlgebra("x", {1, 2, 2}, Flavor::plain, one(0, 1, 2)));
}

TEST(LieAlgebra, FoldsReversedPairs) {
  LieAlgebra g("x", {1, 2, 3}, Flavor::graded, one(1, 0, 2));
  EXPECT_EQ(g.constant(0, 1, 2), -1);
  EXPECT_EQ(g.constant(1, 0, 2), 1);
  EXPECT_TRUE(g.bracket_basis(2, 2).empty());
}

TEST(LieAlgebra, JacobiDetectsFailure) {
  EXPECT_TRUE(jacobi_residual(catalog::V(10)).empty());
  LieAlgebra::Brackets b;
  b[{0, 1}] = SparseVector::unit(1);
  b[{0, 2}] = SparseVector::unit(2);
  b[{1, 2}] = SparseVector::unit(0);
  LieAlgebra bad("bad", {1, 1, 1}, Flavor::plain, b);
  auto failures = jacobi_residual(bad);
  ASSERT_EQ(failures.size(), 1u);
  // [[e1, e2], e3] + cyclic
  EXPECT_EQ(failures[0].residual, SparseVector({{0, Rational(2)}}));
}

TEST(LieAlgebra, CentralSeriesAndFiliform) {
  auto m0 = catalog::m0(6);
  EXPECT_EQ(lower_central_series(m0).dims(), (std::vector<std::size_t>{6, 4, 3, 2, 1, 0}));
  EXPECT_EQ(nil_index(m0), 5u);
  EXPECT_TRUE(is_filiform(m0));
  EXPECT_FALSE(is_filiform(LieAlgebra::abelian(4)));
  EXPECT_EQ(nil_index(LieAlgebra::abelian(4)), 1u);

  LieAlgebra::Brackets so3;
  so3[{0, 1}] = SparseVector::unit(2);
  so3[{1, 2}] = SparseVector::unit(0);
  so3[{0, 2}] = SparseVector({{1, Rational(-1)}});
  LieAlgebra s("so3", {1, 1, 1}, Flavor::plain, so3);
  EXPECT_FALSE(nil_index(s).has_value());
  EXPECT_FALSE(is_filiform(s));
}

TEST(LieAlgebra, CenterOfFiliformIsLastVector) {
  for (std::size_t n : {5, 8, 12}) {
    auto z = center(catalog::V(n));
    EXPECT_EQ(z, LinearSubspace::span(n, {SparseVector::unit(n - 1)}));
  }
  EXPECT_EQ(center(LieAlgebra::abelian(3)).dim(), 3u);
}

TEST(LieAlgebra, AssociatedGradedOfM2IsM0) {
  auto m2 = catalog::m2(9);
  auto gr = associated_graded(m2, lower_central_series(m2));
  EXPECT_TRUE(gr.same_constants(catalog::m0(9)));
  EXPECT_EQ(gr.flavor(), Flavor::graded);
  EXPECT_EQ(gr.weights(), (std::vector<int>{1, 1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(LieAlgebra, AssociatedGradedOfGradedAlgebraIsItself) {
  auto v = catalog::V(9);
  EXPECT_TRUE(associated_graded(v, weight_flag(v)).same_constants(v));
}

TEST(LieAlgebra, FlagsValidate) {
  EXPECT_EQ(basis_flag(4).dims(), (std::vector<std::size_t>{4, 3, 2, 1}));
  Flag bad;
  bad.spaces = {LinearSubspace::span(3, {SparseVector::unit(0)}), LinearSubspace::span(3, {SparseVector::unit(1)})};
  EXPECT_THROW(bad.validate(), PreconditionFailed);
}

TEST(BasisChange, InverseAndCompose) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto phi = support::random_unitriangular(rng, 7);
    EXPECT_TRUE(phi.compose(phi.inverse()).is_identity());
    EXPECT_TRUE(phi.inverse().compose(phi).is_identity());
  }
  auto d = BasisChange::diagonal(3, Rational(2));
  EXPECT_EQ(d.entry(2, 2), 8);
  EXPECT_EQ(d.inverse().entry(1, 1), Rational(1, 4));
  std::vector<Vector> upper = {{Rational(1), Rational(0)}, {Rational(1), Rational(1)}};
  EXPECT_THROW(BasisChange{upper}, PreconditionFailed);
}

TEST(BasisChange, ApplyingAndUndoing) {
  std::mt19937_64 rng(11);
  auto v = catalog::V(10);
  for (int trial = 0; trial < 10; ++trial) {
    auto phi = support::random_unitriangular(rng, 10);
    auto g = apply_basis_change(v, phi);
    EXPECT_TRUE(jacobi_residual(g).empty());
    EXPECT_TRUE(is_filiform(g));
    EXPECT_TRUE(apply_basis_change(g, phi.inverse()).same_constants(v));
  }
  // V is homogeneous, so diagonal scaling fixes it
  EXPECT_TRUE(apply_basis_change(v, BasisChange::diagonal(10, Rational(-3, 2))).same_constants(v));
}

TEST(LieAlgebra, BracketIsBilinear) {
  auto g = catalog::g8(Rational(1));
  SparseVector x({{0, Rational(2)}, {2, Rational(1)}});
  SparseVector y({{1, Rational(-1)}, {3, Rational(3)}});
  SparseVector expected;
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries()) expected.add_scaled(g.bracket_basis(i, j), a * b);
  EXPECT_EQ(bracket(g, x, y), expected);
  EXPECT_EQ(bracket(g, y, x), Rational(-1) * expected);
}
