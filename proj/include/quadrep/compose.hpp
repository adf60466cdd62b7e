#pragma once

// Representations of general m assembled from pieces via the norm identity
//   (a^2 + d b^2)(c^2 + d e^2) = (ac -+ d be)^2 + d (ae +- bc)^2,
// plus scaling of primitive solutions of m / f^2, plus the two-squares
// construction from a palindromic continued fraction.

#include <vector>

#include "quadrep/cornacchia.hpp"
#include "quadrep/factor.hpp"
#include "quadrep/representation.hpp"

namespace quadrep {

// Sign of the y cross term: plus gives (|x1 x2 - d y1 y2|, x1 y2 + x2 y1),
// minus gives (x1 x2 + d y1 y2, |x1 y2 - x2 y1|).
enum class CrossSign { plus, minus };

Representation compose_pair(const Representation& r1, const Representation& r2,
                            CrossSign sign);

enum class PrimePowerKind { cornacchia, lifted, trivial_square, two_power_enum };

struct PrimePowerRep {
  Nat p;
  unsigned e = 0;
  Representation rep;
  PrimePowerKind kind = PrimePowerKind::cornacchia;
};

// Every representation of p^e by x^2 + d y^2, proper and improper.
std::vector<PrimePowerRep> prime_power_rep(const Nat& p, unsigned e, const Nat& d);

struct GeneralReport {
  Factorization factorization;
  Nat squarefree_part;                     // s in m = s * prod p^(2j)
  std::vector<Representation> composed;    // fold of compose_pair over blocks
  std::vector<Representation> scaled;      // f * (proper rep of m / f^2), f >= 2
  std::vector<Representation> proper;      // Cornacchia on m itself
  std::vector<Representation> all;         // union, canonical order
};

GeneralReport solve_general_report(const ProblemSpec& spec,
                                   const FactorOptions& options = {});
std::vector<Representation> solve_general(const ProblemSpec& spec,
                                          const FactorOptions& options = {});

struct SmithResult {
  Nat h;
  Nat x;
  Nat y;
};

// For a prime p = 1 mod 4, scans h in [2, p/2) for the palindromic expansion
// of p/h and reads x^2 + y^2 = p off its midpoint convergent.
SmithResult smith_two_squares(const Nat& p);

}  // namespace quadrep
