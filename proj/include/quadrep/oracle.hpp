#pragma once

// Brute-force ground truth: enumerate y and test m - d y^2 for a square.

#include <vector>

#include "quadrep/representation.hpp"

namespace quadrep {

// All (x, y), x, y >= 0, with x^2 + d y^2 = m; d >= 1, m >= 1.
// Sorted and deduplicated by Representation::canonical.
std::vector<Representation> brute_solutions(const Nat& d, const Nat& m);

// Solutions with y in [y_begin, y_end), unsorted. The building block shared
// by the serial and chunked enumerations.
std::vector<Representation> brute_solutions_range(const Nat& d, const Nat& m,
                                                  const Nat& y_begin, const Nat& y_end);

// Largest y worth trying: isqrt(m / d).
Nat brute_y_max(const Nat& d, const Nat& m);

// The proper subset of brute_solutions.
std::vector<Representation> brute_proper(const Nat& d, const Nat& m);

}  // namespace quadrep
