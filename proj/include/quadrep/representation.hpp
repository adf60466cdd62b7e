#pragma once

#include <compare>
#include <string>
#include <vector>

#include "quadrep/integer.hpp"

namespace quadrep {

// x^2 + d*y^2 = m with x, y >= 0; proper iff gcd(x, y) = 1.
struct Representation {
  Nat x;
  Nat y;
  Nat d;
  Nat m;
  bool proper = false;

  // Builds and checks the identity; proper is computed from gcd(x, y).
  static Representation make(Nat x, Nat y, Nat d, Nat m);

  // Throws std::logic_error if x^2 + d y^2 != m or the proper flag is wrong.
  void check() const;

  // Dedup key: (x, y) for d >= 2; the unordered pair as (max, min) for d = 1.
  std::pair<Nat, Nat> canonical() const;

  std::string to_string() const;  // "m = x^2 + d*y^2 (proper)"
};

// Sorts by canonical key and drops duplicates.
void canonicalize(std::vector<Representation>& reps);

struct ProblemSpec {
  Nat d;
  Nat m;

  // d >= 1, m >= 2, gcd(d, m) = 1. Throws std::invalid_argument.
  void validate() const;
};

}  // namespace quadrep
