#include "filiform/catalog.hpp"

namespace filiform::catalog {

using filiform::to_string;

namespace {

// 1-based helpers; every formula below is written with printed indices.
constexpr std::size_t e(std::size_t i) { return i - 1; }

std::vector<int> index_weights(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i) + 1;
  return w;
}

void put(LieAlgebra::Brackets& b, std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  if (c == 0) return;
  b[{e(i), e(j)}].add_scaled(SparseVector::unit(e(k)), c);
}

LieAlgebra checked(LieAlgebra g) {
  if (!jacobi_residual(g).empty()) throw PreconditionFailed("constructed algebra '" + g.name() + "' fails Jacobi");
  return g;
}

LieAlgebra::Brackets m0_brackets(std::size_t n) {
  LieAlgebra::Brackets b;
  for (std::size_t i = 2; i < n; ++i) put(b, 1, i, i + 1, 1);
  return b;
}

// Polynomial binomial coefficient, valid for every integer top argument.
Rational binom(long top, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= Rational(top - i);
  for (int i = 2; i <= k; ++i) r /= i;
  return r;
}

TwoForm span_form(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                  const std::vector<Rational>& coeffs) {
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> terms;
  for (std::size_t k = 0; k < pairs.size(); ++k) terms.emplace_back(e(pairs[k].first), e(pairs[k].second), coeffs[k]);
  return two_form(n, terms);
}

void need_dim(std::size_t n, std::size_t min, const char* what) {
  if (n < min) throw InputError(std::string(what) + " needs dimension at least " + std::to_string(min));
}

}  // namespace

LieAlgebra m0(std::size_t n) {
  need_dim(n, 3, "m0");
  return checked(LieAlgebra("m0(" + std::to_string(n) + ")", index_weights(n), Flavor::graded, m0_brackets(n)));
}

LieAlgebra m1(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw InputError("m1 needs an even dimension at least 4");
  auto b = m0_brackets(n);
  const std::size_t k = n / 2;
  for (std::size_t j = 2; j <= k; ++j) put(b, j, n + 1 - j, n, j % 2 == 1 ? 1 : -1);
  std::vector<int> w(n);
  w[0] = 1;
  for (std::size_t i = 1; i < n; ++i) w[i] = static_cast<int>(i);
  return checked(LieAlgebra("m1(" + std::to_string(n) + ")", std::move(w), Flavor::graded, std::move(b)));
}

LieAlgebra m2(std::size_t n) {
  need_dim(n, 3, "m2");
  auto b = m0_brackets(n);
  for (std::size_t j = 3; j + 2 <= n; ++j) put(b, 2, j, j + 2, 1);
  return checked(LieAlgebra("m2(" + std::to_string(n) + ")", index_weights(n), Flavor::graded, std::move(b)));
}

LieAlgebra V(std::size_t n) {
  need_dim(n, 3, "V");
  LieAlgebra::Brackets b;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; i + j <= n; ++j) put(b, i, j, i + j, Rational(static_cast<long>(j - i)));
  return LieAlgebra("V(" + std::to_string(n) + ")", index_weights(n), Flavor::graded, std::move(b));
}

namespace {

LieAlgebra::Brackets family_low(const Rational& a) {
  auto b = m0_brackets(8);
  put(b, 2, 3, 5, 2 + a);
  put(b, 2, 4, 6, 2 + a);
  put(b, 2, 5, 7, 1 + a);
  put(b, 3, 4, 7, 1);
  put(b, 2, 6, 8, a);
  put(b, 3, 5, 8, 1);
  return b;
}

void check_excluded(const Rational& a, const std::vector<Rational>& excluded, const char* name) {
  for (const auto& x : excluded)
    if (a == x) throw InputError(std::string(name) + ": parameter " + to_string(a) + " is excluded");
}

}  // namespace

LieAlgebra g8(const Rational& a) {
  check_excluded(a, {ratio(-5, 2), Rational(-2), ratio(-1, 2), ratio(1, 2)}, "g8");
  return checked(LieAlgebra("g8(" + to_string(a) + ")", index_weights(8), Flavor::graded, family_low(a)));
}

LieAlgebra g10(const Rational& a) {
  check_excluded(a, {ratio(-5, 2), ratio(-1, 4), Rational(-1), Rational(-3)}, "g10");
  LieAlgebra::Brackets b;
  for (auto& [ij, v] : family_low(a)) b[ij] = v;
  Rational d = 2 * a + 5;
  put(b, 1, 8, 9, 1);
  put(b, 2, 7, 9, (2 * a * a + 3 * a - 2) / d);
  put(b, 3, 6, 9, (2 * a + 2) / d);
  put(b, 4, 5, 9, 3 / d);
  put(b, 1, 9, 10, 1);
  put(b, 2, 8, 10, (2 * a * a + a - 1) / d);
  put(b, 3, 7, 10, (2 * a - 1) / d);
  put(b, 4, 6, 10, 3 / d);
  return checked(LieAlgebra("g10(" + to_string(a) + ")", index_weights(10), Flavor::graded, std::move(b)));
}

std::string to_string(Poly p) {
  static const char* names[] = {"P1", "P2", "P3", "Q1", "Q2", "Q3", "Z1", "Z2", "Z3", "Z4"};
  return names[static_cast<int>(p)];
}

Poly parse_poly(const std::string& name) {
  for (int i = 0; i < 10; ++i)
    if (to_string(static_cast<Poly>(i)) == name) return static_cast<Poly>(i);
  throw InputError("unknown polynomial family '" + name + "'");
}

Rational poly(Poly family, long j) {
  switch (family) {
    case Poly::P1:
      return (5 * binom(j, 2) + 3 * binom(j, 1) - 6) / 21;
    case Poly::P2:
      return -(4 * binom(j, 2) + 15 * binom(j, 1) - 30) / 21;
    case Poly::P3:
      return -(13 * binom(j, 2) - 30 * binom(j, 1) + 60) / 21;
    case Poly::Q1:
      return (3 * binom(j + 1, 3) + 4 * binom(j + 1, 2) - 4 * binom(j + 1, 1)) / 28;
    case Poly::Q2:
      return (binom(j + 1, 3) - 8 * binom(j + 1, 2) + 8 * binom(j + 1, 1)) / 14;
    case Poly::Q3:
      return (-13 * binom(j + 1, 3) + 20 * binom(j + 1, 2) - 20 * binom(j + 1, 1)) / 28;
    case Poly::Z1:
      return ratio(1, 22) * binom(j + 2, 4) + ratio(23, 231) * binom(j + 2, 3) - ratio(7, 198) * binom(j + 2, 2) -
             ratio(59, 693) * binom(j + 2, 1) + ratio(37, 231);
    case Poly::Z2:
      // +59/99 on the linear term; with -59/99 the weight-11 step equation has no solution.
      return ratio(17, 154) * binom(j + 2, 4) - ratio(62, 231) * binom(j + 2, 3) - ratio(53, 1386) * binom(j + 2, 2) +
             ratio(59, 99) * binom(j + 2, 1) - ratio(37, 33);
    case Poly::Z3:
      return -ratio(29, 154) * binom(j + 2, 4) - ratio(4, 77) * binom(j + 2, 3) + ratio(317, 462) * binom(j + 2, 2) -
             ratio(59, 33) * binom(j + 2, 1) + ratio(37, 11);
    case Poly::Z4:
      return -ratio(47, 154) * binom(j + 2, 4) + ratio(185, 231) * binom(j + 2, 3) -
             ratio(2245, 1386) * binom(j + 2, 2) + ratio(295, 99) * binom(j + 2, 1) - ratio(185, 33);
  }
  throw InputError("unknown polynomial family");
}

TwoForm g5(std::size_t n) {
  need_dim(n, 3, "g5");
  return span_form(n, {{2, 3}}, {1});
}

TwoForm g7(std::size_t n) {
  need_dim(n, 5, "g7");
  return span_form(n, {{2, 5}, {3, 4}}, {1, -3});
}

Cochain g12(std::size_t n) {
  need_dim(n, 7, "g12");
  return Cochain::form(n, 3, {{{e(2), e(3), e(7)}, 2}, {{e(2), e(4), e(6)}, -5}, {{e(3), e(4), e(5)}, 20}});
}

namespace {

TwoForm sixth_form(std::size_t n, const Rational& scale) {
  return span_form(n, {{2, 6}, {3, 5}}, {scale, -2 * scale});
}
TwoForm p_form(std::size_t n, long j) {
  return span_form(n, {{2, 7}, {3, 6}, {4, 5}}, {poly(Poly::P1, j), poly(Poly::P2, j), poly(Poly::P3, j)});
}
TwoForm q_form(std::size_t n, long j) {
  return span_form(n, {{2, 8}, {3, 7}, {4, 6}}, {poly(Poly::Q1, j), poly(Poly::Q2, j), poly(Poly::Q3, j)});
}
TwoForm z_form(std::size_t n, long j) {
  return span_form(n, {{2, 9}, {3, 8}, {4, 7}, {5, 6}},
                   {poly(Poly::Z1, j), poly(Poly::Z2, j), poly(Poly::Z3, j), poly(Poly::Z4, j)});
}

}  // namespace

std::array<TwoForm, 4> xi_forms(std::size_t n, long j) {
  need_dim(n, 9, "xi forms");
  return {sixth_form(n, ratio(j - 1, 2)), p_form(n, j), q_form(n, j), z_form(n, j)};
}

Cochain psi(std::size_t n, int l) {
  if (l < 7 || l > 11) throw InputError("basic cocycle index l must lie in 7..11");
  need_dim(n, 12, "basic cocycles");
  const std::size_t layers = static_cast<std::size_t>(l - 7);
  const std::size_t base = n - layers;
  auto xi = xi_forms(n, static_cast<long>(base));
  Cochain out = Cochain::tensor(e(base), g7(n));
  for (std::size_t p = 1; p <= layers; ++p) out.add(Cochain::tensor(e(base + p), xi[p - 1]));
  return out;
}

TwoForm omega_proj(std::size_t n, std::size_t m) {
  if (m < n + 1 || m > n + 3) throw InputError("projection index must be n+1, n+2 or n+3");
  const std::size_t skip = m - n - 1;  // i, j > skip
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> terms;
  for (std::size_t i = skip + 1; 2 * i < m; ++i) {
    std::size_t j = m - i;
    if (j > n) continue;
    terms.emplace_back(e(i), e(j), Rational(static_cast<long>(j - i)));
  }
  return two_form(n, terms);
}

TwoForm omega_catalog(const std::string& name, std::size_t n, const std::optional<Rational>& alpha) {
  if (name == "m0") {
    if (n < 4 || n % 2 != 0) throw InputError("m0 form needs an even dimension at least 4");
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> terms;
    for (std::size_t i = 1; 2 * i < n + 1; ++i) terms.emplace_back(e(i), e(n + 1 - i), i % 2 == 1 ? 1 : -1);
    return two_form(n, terms);
  }
  if (name == "V") {
    if (n < 4 || n % 2 != 0) throw InputError("V form needs an even dimension at least 4");
    return omega_proj(n, n + 1);
  }
  if (name == "g8" || name == "g10") {
    if (!alpha) throw InputError(name + " form needs a parameter");
    const Rational& a = *alpha;
    if (name == "g8") {
      g8(a);  // validates the parameter
      Rational d = 2 * a + 5;
      return span_form(8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}, {1, (2 * a * a + 3 * a - 2) / d, (2 * a + 2) / d, 3 / d});
    }
    g10(a);
    Rational q = 2 * (a * a + 4 * a + 3);
    Rational d = q * (2 * a + 5);
    return span_form(10, {{1, 10}, {2, 9}, {3, 8}, {4, 7}, {5, 6}},
                     {1, (2 * a * a * a + 2 * a * a + 3) / q, (4 * a * a * a + 8 * a * a - 8 * a - 21) / d,
                      3 * (2 * a * a + 4 * a + 5) / d, 3 * (4 * a + 1) / d});
  }
  throw InputError("no listed form for '" + name + "'");
}

LieAlgebra gX(std::size_t n, const Quadruple& x) {
  if (n < 16 || n % 2 != 0) throw InputError("gX needs an even dimension at least 16");
  LieAlgebra::Brackets b;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; i + j <= n; ++j) put(b, i, j, i + j, Rational(static_cast<long>(j - i)));
  const long k2 = static_cast<long>(n);
  // coordinate a (1-based) has weight 2k - 11 + a
  auto at = [&](std::size_t i, std::size_t j, int a, const Rational& c) {
    std::size_t target = i + j + static_cast<std::size_t>(k2 - 11 + a);
    put(b, i, j, target, x[a - 1] * c);
  };
  for (int a = 1; a <= 4; ++a) {
    at(2, 5, a, 1);
    at(3, 4, a, -3);
  }
  for (int a = 1; a <= 3; ++a) {
    Rational s(k2 - 5 + a);
    at(2, 6, a, s / 2);
    at(3, 5, a, -s);
  }
  for (int a = 1; a <= 2; ++a) {
    long j = k2 - 4 + a;
    at(2, 7, a, poly(Poly::P1, j));
    at(3, 6, a, poly(Poly::P2, j));
    at(4, 5, a, poly(Poly::P3, j));
  }
  at(2, 8, 1, poly(Poly::Q1, k2 - 3));
  at(3, 7, 1, poly(Poly::Q2, k2 - 3));
  at(4, 6, 1, poly(Poly::Q3, k2 - 3));
  std::string name = "gX(" + std::to_string(n) + ";" + to_string(x[0]) + "," + to_string(x[1]) + "," +
                     to_string(x[2]) + "," + to_string(x[3]) + ")";
  return checked(LieAlgebra(name, index_weights(n), Flavor::filtered, std::move(b)));
}

TwoForm omega_piece(std::size_t n, int l) {
  if (n < 16 || n % 2 != 0) throw InputError("form pieces need an even dimension at least 16");
  const long k2 = static_cast<long>(n);
  switch (l) {
    case 7:
      return g7(n);
    case 8:
      return sixth_form(n, ratio(k2 - 1, 2));
    case 9:
      return p_form(n, k2 - 1);
    case 10:
      return q_form(n, k2 - 2);
    case 11:
      return z_form(n, k2 - 3);
    default:
      throw InputError("form piece index must lie in 7..11");
  }
}

TwoForm omega_X(std::size_t n, const Quadruple& x, const Rational& x5) {
  TwoForm out = omega_proj(n, n + 1);
  for (int a = 1; a <= 4; ++a) out.add(omega_piece(n, 12 - a), x[a - 1]);
  out.add(omega_piece(n, 7), x5);
  return out;
}

}  // namespace filiform::catalog
