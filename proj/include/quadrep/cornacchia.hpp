#pragma once

// Cornacchia's algorithm for x^2 + d y^2 = m.
//
// For a normalized root w of -d mod m (m/2 <= w < m), run the Euclidean
// chain on (w, m) and stop at the first remainder t with t^2 <= m. With
// D the matching convergent denominator, t^2 + d D^2 = m holds exactly when
// a proper solution belongs to w, and then (t, D) is that solution. For
// d = 1 the stopping rule is on the denominators instead and always
// succeeds.

#include <optional>
#include <vector>

#include "quadrep/contfrac.hpp"
#include "quadrep/factor.hpp"
#include "quadrep/modsqrt.hpp"
#include "quadrep/representation.hpp"

namespace quadrep {

// Stopping data of one run, as printed by `solve --verbose`.
struct RootAttempt {
  Nat w;
  long index = 0;  // nu for d >= 2, mu for d = 1
  Nat t_index;     // r(index)
  Nat t;           // r(index + 1)
  Nat D;           // B(index)
  std::optional<Representation> rep;
};

RootAttempt attempt_root(const Nat& w, const ProblemSpec& spec);

// d >= 2. Absent means no proper solution corresponds to w.
std::optional<Representation> solve_for_root(const Nat& w, const ProblemSpec& spec);

// d = 1; always succeeds for a valid root.
Representation solve_d1_for_root(const Nat& w, const Nat& m);

struct ProperReport {
  RootSet roots;
  std::vector<RootAttempt> attempts;         // one per root, ascending w
  std::vector<Representation> solutions;     // successes, in root order
};

ProperReport solve_proper_report(const ProblemSpec& spec, const Factorization& f);
std::vector<Representation> solve_proper(const ProblemSpec& spec, const Factorization& f);

}  // namespace quadrep
