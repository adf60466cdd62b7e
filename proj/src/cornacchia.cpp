#include "quadrep/cornacchia.hpp"

#include <stdexcept>

namespace quadrep {

namespace {

void require_root(const Nat& w, const Nat& d, const Nat& m) {
  if (2 * w < m || w >= m) {
    throw std::invalid_argument("root w = " + w.get_str() + " outside [m/2, m)");
  }
  if (mod(w * w + d, m) != 0) {
    throw std::invalid_argument("w^2 != -" + d.get_str() + " mod " + m.get_str());
  }
}

// t(j+1)^2 + d B(j)^2 = 0 (mod m) along the whole chain.
[[maybe_unused]] void check_congruence_chain(const Antenaresis& cf, const Nat& d,
                                             const Nat& m) {
  for (long j = -1; j <= cf.k(); ++j) {
    if (mod(cf.r(j + 1) * cf.r(j + 1) + d * cf.B(j) * cf.B(j), m) != 0) {
      throw std::logic_error("congruence invariant broken at j = " + std::to_string(j));
    }
  }
}

}  // namespace

RootAttempt attempt_root(const Nat& w, const ProblemSpec& spec) {
  spec.validate();
  require_root(w, spec.d, spec.m);
  const Nat& m = spec.m;
  const Nat& d = spec.d;

  auto cf = Antenaresis::expand(w, m);
#ifndef NDEBUG
  check_congruence_chain(cf, d, m);
#endif

  RootAttempt out;
  out.w = w;
  out.index = d == 1 ? find_mu(cf, m) : find_nu(cf, m);
  out.t_index = cf.r(out.index);
  out.t = cf.r(out.index + 1);
  out.D = cf.B(out.index);

  if (out.t * out.t + d * out.D * out.D != m) {
    if (d == 1) {
      throw std::logic_error("d = 1 run failed for w = " + w.get_str() +
                             ", m = " + m.get_str());
    }
    return out;
  }
  // Success implies coprimality; check it rather than assume it.
  if (gcd(out.t, out.D) != 1) {
    throw std::logic_error("accepted solution is not proper for w = " + w.get_str());
  }
  auto y = perfect_square((m - out.t * out.t) / d);
  if (!y || *y != out.D) {
    throw std::logic_error("denominator disagrees with (m - t^2)/d for w = " + w.get_str());
  }
  out.rep = Representation::make(out.t, out.D, d, m);
  return out;
}

std::optional<Representation> solve_for_root(const Nat& w, const ProblemSpec& spec) {
  if (spec.d < 2) throw std::invalid_argument("solve_for_root needs d >= 2");
  return attempt_root(w, spec).rep;
}

Representation solve_d1_for_root(const Nat& w, const Nat& m) {
  return *attempt_root(w, ProblemSpec{1, m}).rep;
}

ProperReport solve_proper_report(const ProblemSpec& spec, const Factorization& f) {
  spec.validate();
  ProperReport report;
  report.roots = RootSet{spec.m, -Int(spec.d), {}};
  if (spec.d >= 2 && spec.m <= spec.d) return report;

  report.roots = sqrt_minus_d_mod_m(spec.d, spec.m, f);
  for (const Nat& w : report.roots.roots) {
    report.attempts.push_back(attempt_root(w, spec));
    if (report.attempts.back().rep) {
      report.solutions.push_back(*report.attempts.back().rep);
    }
  }
  return report;
}

std::vector<Representation> solve_proper(const ProblemSpec& spec, const Factorization& f) {
  return solve_proper_report(spec, f).solutions;
}

}  // namespace quadrep
