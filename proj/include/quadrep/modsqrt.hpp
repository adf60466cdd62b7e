#pragma once

// Square roots modulo primes, prime powers and composites.
//
// Single-root operations may return either member of {r, p - r}; the
// representative is fixed only by normalize_root.

#include <vector>

#include "quadrep/factor.hpp"
#include "quadrep/integer.hpp"

namespace quadrep {

enum class Residuosity { residue, nonresidue, zero };

// Classification of a by a^((p-1)/2) mod p. p must be an odd prime.
Residuosity euler_residue(const Int& a, const Nat& p);

// a^((p+1)/4) mod p for p = 3 mod 4. Throws std::domain_error when a is
// not a residue (detected by squaring the result).
Nat sqrt_3mod4(const Int& a, const Nat& p);

// Tonelli-Shanks. p must be an odd prime; throws std::domain_error on a
// nonresidue.
Nat tonelli(const Int& a, const Nat& p);

// Lifts r with r^2 = a (mod p) to a root mod p^e by Newton steps; the
// result is congruent to r mod p. Throws std::domain_error if p | 2r or r is
// not a root mod p.
Nat hensel_lift(const Nat& r, const Int& a, const Nat& p, unsigned e);

// All r in [0, 2^e) with r^2 = a (mod 2^e), by enumeration; e <= 6.
std::vector<Nat> sqrt_mod_2power(const Int& a, unsigned e);

// Maps r to the representative of {r, m - r} in [m/2, m).
Nat normalize_root(const Nat& r, const Nat& m);

struct RootSet {
  Nat modulus;
  Int target;
  std::vector<Nat> roots;  // ascending, each in [m/2, m)
};

// Every normalized w with w^2 = a (mod m), a coprime to m, combined by CRT
// from the prime-power factors in f.
RootSet sqrt_mod(const Int& a, const Nat& m, const Factorization& f);

// sqrt_mod(-d, m, f); requires gcd(d, m) = 1.
RootSet sqrt_minus_d_mod_m(const Nat& d, const Nat& m, const Factorization& f);

}  // namespace quadrep
