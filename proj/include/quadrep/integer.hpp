#pragma once

// Arbitrary-precision integer primitives shared by every other module.
//
// Nat and Int are both GMP integers. Nat carries the additional invariant
// value >= 0, which functions taking a Nat check on entry.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace quadrep {

using Int = mpz_class;
using Nat = mpz_class;

// Throws std::invalid_argument naming `what` when n < 0.
void require_nat(const Nat& n, std::string_view what);

// Parses a decimal integer (optional leading sign). Throws std::invalid_argument.
Int parse_int(std::string_view text);

// Largest s with s*s <= n, by Newton iteration.
Nat isqrt(const Nat& n);

// s with s*s == n, if any.
std::optional<Nat> perfect_square(const Nat& n);

struct ExtGcd {
  Nat g;
  Int s;
  Int t;
};

// Iterative extended Euclid: s*a + t*b == g == gcd(a, b).
// Coefficients are the ones the plain iteration produces, so results are
// reproducible across runs and platforms.
ExtGcd ext_gcd(const Nat& a, const Nat& b);

// base^exp mod modulus, result in [0, modulus).
Nat mod_pow(const Int& base, const Nat& exp, const Nat& modulus);

// Least non-negative residue of a mod m (m >= 1).
Nat mod(const Int& a, const Nat& m);

// Inverse of a mod m; throws std::domain_error if gcd(a, m) != 1.
Nat mod_inverse(const Int& a, const Nat& m);

Nat gcd(const Int& a, const Int& b);

inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace quadrep
