#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filiform/error.hpp"

namespace filiform {

/// Exact rational scalar. Arithmetic results are canonical (gcd 1, positive
/// denominator); the two-argument gmpxx constructor is not, so build
/// fractions through ratio().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, long exponent);

/// Signed prime factorization of a nonzero integer whose absolute value fits in
/// 64 bits. Throws FactorizationOverflow otherwise.
struct Factorization {
  int sign = 1;
  std::vector<std::pair<std::uint64_t, int>> powers;  // ascending primes
};
Factorization factorize(const Integer& value);

/// All alpha in Q with alpha^w = q. q = 0 gives {0}.
std::vector<Rational> rational_roots(const Rational& q, int w);

}  // namespace filiform
