#include "filiform/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

namespace filiform {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + start, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  auto slash = trimmed.find('/');
  auto num_text = trimmed.substr(0, slash);
  auto den_text = slash == std::string_view::npos ? std::string_view("1") : trimmed.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+')
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  Integer num(std::string(num_text[0] == '+' ? num_text.substr(1) : num_text));
  Integer den{std::string(den_text)};
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw PreconditionFailed("negative power of zero");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with these bases.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factorize(const Integer& value) {
  if (value == 0) throw PreconditionFailed("cannot factorize zero");
  Integer magnitude = abs(value);
  if (mpz_sizeinbase(magnitude.get_mpz_t(), 2) > 64)
    throw FactorizationOverflow("factorization overflow: |" + value.get_str() + "| exceeds 64 bits");
  u64 n = 0;
  mpz_export(&n, nullptr, -1, sizeof(n), 0, 0, magnitude.get_mpz_t());

  std::map<u64, int> powers;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++powers[p];
      n /= p;
    }
  }
  factor_into(n, powers);

  Factorization result;
  result.sign = value < 0 ? -1 : 1;
  result.powers.assign(powers.begin(), powers.end());
  return result;
}

namespace {

// Exact w-th root of a positive integer, if it exists.
std::optional<Integer> integer_root(const Integer& value, int w) {
  Integer root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(w)) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::vector<Rational> rational_roots(const Rational& q, int w) {
  if (w < 1) throw PreconditionFailed("root degree must be positive");
  if (q == 0) return {Rational(0)};
  if (w == 1) return {q};
  if (q < 0 && w % 2 == 0) return {};

  auto num = integer_root(abs(q.get_num()), w);
  if (!num) return {};
  auto den = integer_root(q.get_den(), w);
  if (!den) return {};
  Rational root(*num, *den);
  root.canonicalize();
  if (q < 0) return {-root};
  if (w % 2 == 0) return {-root, root};
  return {root};
}

}  // namespace filiform
