#include <gtest/gtest.h>

#include "filiform/catalog.hpp"
#include "filiform/cohomology.hpp"

using namespace filiform;
using namespace filiform::catalog;

namespace {

// Candidates p/q with p | a0 and q | a3 evaluated directly.
bool cubic_has_rational_root(long a3, long a2, long a1, long a0) {
  auto divisors = [](long v) {
    std::vector<long> out;
    for (long d = 1; d <= std::labs(v); ++d)
      if (v % d == 0) out.push_back(d);
    return out;
  };
  for (long p : divisors(a0))
    for (long q : divisors(a3))
      for (long s : {1, -1}) {
        Rational x = ratio(s * p, q);
        if (a3 * x * x * x + a2 * x * x + a1 * x + a0 == 0) return true;
      }
  return false;
}

std::size_t row_count(const LieAlgebra& g) { return g.brackets().size(); }

}  // namespace

TEST(Catalog, BracketRows) {
  EXPECT_EQ(row_count(V(6)), 6u);
  EXPECT_EQ(V(6).constant(1, 3, 5), 2);  // [e2, e4] = 2 e6
  EXPECT_EQ(row_count(m0(6)), 4u);
  EXPECT_EQ(m1(6).constant(2, 3, 5), 1);  // [e3, e4] = e6
  EXPECT_EQ(m1(6).constant(1, 4, 5), -1);  // [e2, e5] = -e6
  EXPECT_EQ(m2(7).constant(1, 4, 6), 1);   // [e2, e5] = e7
}

TEST(Catalog, EveryFamilyIsFiliform) {
  for (std::size_t n = 4; n <= 14; ++n) {
    EXPECT_TRUE(is_filiform(m0(n))) << n;
    EXPECT_TRUE(is_filiform(m2(n))) << n;
    EXPECT_TRUE(is_filiform(V(n))) << n;
    if (n % 2 == 0) EXPECT_TRUE(is_filiform(m1(n))) << n;
  }
  for (long a : {0L, 1L, 2L, -4L, 7L}) {
    EXPECT_TRUE(is_filiform(g8(Rational(a))));
    EXPECT_TRUE(is_filiform(g10(Rational(a))));
  }
}

TEST(Catalog, ExcludedParameters) {
  for (auto a : {ratio(-5, 2), Rational(-2), ratio(-1, 2), ratio(1, 2)}) EXPECT_THROW(g8(a), InputError);
  for (auto a : {ratio(-5, 2), ratio(-1, 4), Rational(-1), Rational(-3)}) EXPECT_THROW(g10(a), InputError);
  EXPECT_NO_THROW(g10(ratio(1, 2)));
  EXPECT_NO_THROW(g10(Rational(-2)));
}

TEST(Catalog, CubicExclusionsHaveNoRationalRoots) {
  EXPECT_FALSE(cubic_has_rational_root(2, 2, 0, 3));
  EXPECT_FALSE(cubic_has_rational_root(4, 8, -8, -21));
  EXPECT_TRUE(cubic_has_rational_root(2, -1, 0, -1));  // 2x^3 - x^2 - 1 at x = 1
  EXPECT_TRUE(rational_roots(Rational(0), 1).size() == 1u);
}

TEST(Catalog, GradedWeights) {
  EXPECT_EQ(m1(8).weights(), (std::vector<int>{1, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(V(5).weights(), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(g10(Rational(1)).flavor(), Flavor::graded);
}

TEST(Catalog, BasicCocyclesAreClosed) {
  for (std::size_t n = 12; n <= 20; ++n) {
    auto v = V(n);
    for (int l = 7; l <= 11; ++l) {
      auto p = psi(n, l);
      EXPECT_EQ(p.weight(v.weights()), static_cast<int>(n) - l);
      EXPECT_TRUE(is_cocycle(v, p)) << n << " " << l;
    }
  }
}

TEST(Catalog, TrivialGenerators) {
  auto v = V(14);
  EXPECT_TRUE(is_cocycle(v, g5(14)));
  EXPECT_TRUE(is_cocycle(v, g7(14)));
  EXPECT_TRUE(is_cocycle(v, g12(14)));
  EXPECT_FALSE(coboundary_preimage(v, g7(14)).has_value());
  EXPECT_FALSE(coboundary_preimage(v, g12(14)).has_value());
  EXPECT_EQ(g12(14).weight(v.weights()), 12);
}

TEST(Catalog, PolynomialNames) {
  for (auto p : {Poly::P1, Poly::P3, Poly::Q2, Poly::Z4}) EXPECT_EQ(parse_poly(to_string(p)), p);
  EXPECT_THROW(parse_poly("R1"), InputError);
}

TEST(Catalog, XiSystemWithDerivedCoefficients) {
  auto v = V(20);
  auto e = [](std::size_t i) { return Cochain::form(20, 1, {{{i - 1}, Rational(1)}}); };
  auto g = g7(20);
  for (long j = 2; j <= 12; ++j) {
    auto xi = xi_forms(20, j);
    EXPECT_EQ(differential(v, xi[0]), Rational(j - 1) * wedge(e(1), g));
    EXPECT_EQ(differential(v, xi[1]), Rational(j) * wedge(e(1), xi[0]) + Rational(j - 2) * wedge(e(2), g));
    EXPECT_EQ(differential(v, xi[2]), Rational(j + 1) * wedge(e(1), xi[1]) + Rational(j - 1) * wedge(e(2), xi[0]) +
                                          Rational(j - 3) * wedge(e(3), g));
    EXPECT_EQ(differential(v, xi[3]), Rational(j + 2) * wedge(e(1), xi[2]) + Rational(j) * wedge(e(2), xi[1]) +
                                          Rational(j - 2) * wedge(e(3), xi[0]) + Rational(j - 4) * wedge(e(4), g));
  }
}

TEST(Catalog, GXIsJacobiAndFiltered) {
  Quadruple x{Rational(1), ratio(-2, 3), Rational(5), Rational(1, 7)};
  auto g = gX(16, x);
  EXPECT_TRUE(jacobi_residual(g).empty());
  EXPECT_TRUE(is_filiform(g));
  EXPECT_EQ(g.flavor(), Flavor::filtered);
  EXPECT_THROW(gX(15, x), InputError);
}

TEST(Catalog, OmegaProjection) {
  // sum over i < j, i + j = 9 in dimension 8
  auto w = omega_proj(8, 9);
  EXPECT_EQ(w.terms().size(), 4u);
  EXPECT_EQ(w.value({0, 7}), 7);
  EXPECT_EQ(w.value({3, 4}), 1);
  EXPECT_EQ(omega_proj(8, 10).value({1, 7}), 6);
  EXPECT_EQ(omega_proj(8, 10).value({0, 8 - 1}), 0);
}
