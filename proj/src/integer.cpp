#include "quadrep/integer.hpp"

#include <stdexcept>
#include <utility>

namespace quadrep {

void require_nat(const Nat& n, std::string_view what) {
  if (sgn(n) < 0) {
    throw std::invalid_argument(std::string(what) + " must be non-negative");
  }
}

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("not an integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Nat isqrt(const Nat& n) {
  require_nat(n, "isqrt argument");
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) > sqrt(n).
  Nat x = 1;
  x <<= (mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2;
  while (true) {
    Nat y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<Nat> perfect_square(const Nat& n) {
  if (sgn(n) < 0) return std::nullopt;
  Nat s = isqrt(n);
  if (s * s == n) return s;
  return std::nullopt;
}

ExtGcd ext_gcd(const Nat& a, const Nat& b) {
  require_nat(a, "ext_gcd a");
  require_nat(b, "ext_gcd b");
  if (a == 0 && b == 0) {
    throw std::invalid_argument("ext_gcd of (0, 0) is undefined");
  }
  Int r0 = a, r1 = b;
  Int s0 = 1, s1 = 0;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    Int t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {r0, s0, t0};
}

Nat mod(const Int& a, const Nat& m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  Nat r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Nat mod_pow(const Int& base, const Nat& exp, const Nat& modulus) {
  require_nat(exp, "exponent");
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (modulus == 1) return 0;
  Nat r;
  Nat b = mod(base, modulus);
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Nat mod_inverse(const Int& a, const Nat& m) {
  Nat r = mod(a, m);
  if (m == 1) return 0;
  auto e = ext_gcd(r, m);
  if (e.g != 1) {
    throw std::domain_error(r.get_str() + " is not invertible mod " + m.get_str());
  }
  return mod(e.s, m);
}

Nat gcd(const Int& a, const Int& b) {
  Nat g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace quadrep
