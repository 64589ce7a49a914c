#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace frieze {

/// Exact arbitrary-precision integer used for all labels and residues.
using Int = mpz_class;

/// p-adic valuation of x: the largest e with p^e | x. Requires x != 0 and p >= 2.
int valuation(const Int& x, const Int& p);

/// x with every factor of p removed, i.e. x / p^valuation(x, p).
Int p_free_part(const Int& x, const Int& p);

/// Non-negative representative of a modulo m (m > 0).
Int mod_floor(const Int& a, const Int& m);

/// Extended Euclidean algorithm: returns g = gcd(a, b) and sets s, t with a*s + b*t = g.
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t);

/// Inverse of a modulo m via the extended Euclidean procedure, in [0, m).
/// Requires gcd(a, m) = 1 and m > 1.
Int mod_inverse(const Int& a, const Int& m);

/// Solves x = r1 (mod m1), x = r2 (mod m2) for coprime moduli; result in [0, m1*m2).
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

/// base^exp for small non-negative exponents.
Int int_pow(const Int& base, int exp);

/// Prime factorization by trial division, as (prime, exponent) pairs in ascending
/// prime order. Intended for desk-scale inputs. Requires x >= 1.
std::vector<std::pair<Int, int>> factorize(const Int& x);

/// All primes strictly below n, ascending.
std::vector<int> primes_below(int n);

}  // namespace frieze
