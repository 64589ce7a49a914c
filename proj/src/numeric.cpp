#include "frieze/numeric.hpp"

#include <stdexcept>

namespace frieze {

int valuation(const Int& x, const Int& p) {
  if (x == 0) throw std::domain_error("valuation: x must be nonzero");
  if (p < 2) throw std::domain_error("valuation: p must be >= 2");
  Int reduced;
  return static_cast<int>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

Int p_free_part(const Int& x, const Int& p) {
  if (x == 0) throw std::domain_error("p_free_part: x must be nonzero");
  Int reduced;
  mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return reduced;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  // Iterative extended Euclid keeping (r, s, t) with a*s + b*t = r.
  Int r0 = a, r1 = b;
  Int s0 = 1, s1 = 0;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;  // truncated division is fine: invariants hold for any quotient
    Int tmp;
    tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  s = s0;
  t = t0;
  return r0;
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m <= 1) throw std::domain_error("mod_inverse: modulus must be > 1");
  Int s, t;
  Int g = ext_gcd(mod_floor(a, m), m, s, t);
  if (g != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
  return mod_floor(s, m);
}

Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  // x = r1 + m1 * k with k = (r2 - r1) / m1 mod m2.
  Int k = mod_floor((r2 - r1) * mod_inverse(m1, m2), m2);
  return r1 + m1 * k;
}

Int int_pow(const Int& base, int exp) {
  if (exp < 0) throw std::domain_error("int_pow: negative exponent");
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

std::vector<std::pair<Int, int>> factorize(const Int& x) {
  if (x < 1) throw std::domain_error("factorize: x must be >= 1");
  std::vector<std::pair<Int, int>> out;
  Int rest = x;
  auto strip = [&](const Int& p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  Int d = 5;
  // Trial division stepping over multiples of 2 and 3.
  while (d * d <= rest) {
    strip(d);
    strip(d + 2);
    d += 6;
  }
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

std::vector<int> primes_below(int n) {
  std::vector<int> out;
  for (int p = 2; p < n; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q) {
      if (p % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

}  // namespace frieze
