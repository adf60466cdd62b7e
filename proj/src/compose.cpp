#include "quadrep/compose.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "quadrep/contfrac.hpp"
#include "quadrep/oracle.hpp"

namespace quadrep {

namespace {

Nat power(const Nat& p, unsigned e) {
  Nat out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
  return out;
}

Factorization single(const Nat& p, unsigned e) {
  Factorization f;
  f.n = power(p, e);
  f.factors = {{p, e}};
  f.certified = true;
  return f;
}

// Factorization of m / f^2 given m's factorization and the halved exponents of f.
Factorization divide_square(const Factorization& m, const std::vector<unsigned>& half) {
  Factorization out;
  out.n = 1;
  out.certified = m.certified;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    unsigned e = m.factors[i].e - 2 * half[i];
    if (e > 0) {
      out.factors.push_back({m.factors[i].p, e});
      out.n *= power(m.factors[i].p, e);
    }
  }
  return out;
}

Representation scale(const Representation& r, const Nat& f) {
  return Representation::make(r.x * f, r.y * f, r.d, r.m * f * f);
}

// Proper representations of n, including n = 1.
std::vector<Representation> proper_of(const Nat& d, const Factorization& f) {
  if (f.n == 1) return {Representation::make(1, 0, d, 1)};
  return solve_proper(ProblemSpec{d, f.n}, f);
}

}  // namespace

Representation compose_pair(const Representation& r1, const Representation& r2,
                            CrossSign sign) {
  if (r1.d != r2.d) throw std::invalid_argument("compose_pair: d mismatch");
  const Nat& d = r1.d;
  Nat x, y;
  if (sign == CrossSign::plus) {
    x = abs(r1.x * r2.x - d * r1.y * r2.y);
    y = r1.x * r2.y + r2.x * r1.y;
  } else {
    x = r1.x * r2.x + d * r1.y * r2.y;
    y = abs(r1.x * r2.y - r2.x * r1.y);
  }
  return Representation::make(std::move(x), std::move(y), d, r1.m * r2.m);
}

std::vector<PrimePowerRep> prime_power_rep(const Nat& p, unsigned e, const Nat& d) {
  if (e < 1) throw std::invalid_argument("prime_power_rep needs e >= 1");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
  if (gcd(p, d) != 1) throw std::invalid_argument("p must not divide d");

  std::vector<PrimePowerRep> out;
  if (p == 2 && e <= 6) {
    for (auto& rep : brute_solutions(d, power(p, e))) {
      out.push_back({p, e, std::move(rep), PrimePowerKind::two_power_enum});
    }
    return out;
  }

  // p^e = p^(2j) * p^(e - 2j): scale the proper solutions of the cofactor.
  for (unsigned j = 0; 2 * j <= e; ++j) {
    const unsigned rest = e - 2 * j;
    const Nat f = power(p, j);
    if (rest == 0) {
      out.push_back({p, e, Representation::make(f, 0, d, power(p, e)),
                     PrimePowerKind::trivial_square});
      continue;
    }
    const auto kind = rest == 1 ? PrimePowerKind::cornacchia : PrimePowerKind::lifted;
    for (const auto& rep : solve_proper(ProblemSpec{d, power(p, rest)}, single(p, rest))) {
      out.push_back({p, e, scale(rep, f), kind});
    }
  }
  return out;
}

GeneralReport solve_general_report(const ProblemSpec& spec, const FactorOptions& options) {
  spec.validate();
  const Nat& d = spec.d;
  GeneralReport report;
  report.factorization = factorize(spec.m, options);
  const auto& fm = report.factorization;

  // Blocks: one square-free block s, plus p^(e or e-1) for every e >= 2.
  report.squarefree_part = 1;
  Factorization s;
  s.certified = true;
  std::vector<std::vector<Representation>> blocks;
  for (const auto& [p, e] : fm.factors) {
    if (e % 2 == 1) {
      report.squarefree_part *= p;
      s.factors.push_back({p, 1});
    }
    if (e >= 2) {
      std::vector<Representation> reps;
      for (auto& ppr : prime_power_rep(p, e - e % 2, d)) reps.push_back(std::move(ppr.rep));
      blocks.push_back(std::move(reps));
    }
  }
  s.n = report.squarefree_part;
  if (s.n > 1) blocks.insert(blocks.begin(), proper_of(d, s));

  std::vector<Representation> acc = {Representation::make(1, 0, d, 1)};
  for (const auto& block : blocks) {
    std::vector<Representation> next;
    for (const auto& a : acc) {
      for (const auto& b : block) {
        next.push_back(compose_pair(a, b, CrossSign::plus));
        next.push_back(compose_pair(a, b, CrossSign::minus));
      }
    }
    canonicalize(next);
    acc = std::move(next);
  }
  report.composed = std::move(acc);

  // Every f with f^2 | m, as halved exponent vectors.
  std::vector<unsigned> half(fm.factors.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < half.size() && 2 * (half[i] + 1) > fm.factors[i].e) half[i++] = 0;
    if (i == half.size()) break;
    ++half[i];
    Nat f = 1;
    for (std::size_t k = 0; k < half.size(); ++k) f *= power(fm.factors[k].p, half[k]);
    for (const auto& rep : proper_of(d, divide_square(fm, half))) {
      report.scaled.push_back(scale(rep, f));
    }
  }
  canonicalize(report.scaled);

  report.proper = solve_proper(spec, fm);

  report.all = report.composed;
  report.all.insert(report.all.end(), report.scaled.begin(), report.scaled.end());
  report.all.insert(report.all.end(), report.proper.begin(), report.proper.end());
  canonicalize(report.all);

  // Composition may only reproduce proper solutions Cornacchia already found.
  auto direct = report.proper;
  canonicalize(direct);
  for (const auto& rep : report.all) {
    if (!rep.proper) continue;
    bool found = std::any_of(direct.begin(), direct.end(), [&](const Representation& r) {
      return r.x == rep.x && r.y == rep.y;
    });
    if (!found) {
      throw std::logic_error("composed proper solution missed by Cornacchia: " +
                             rep.to_string());
    }
  }
  return report;
}

std::vector<Representation> solve_general(const ProblemSpec& spec,
                                          const FactorOptions& options) {
  return solve_general_report(spec, options).all;
}

SmithResult smith_two_squares(const Nat& p) {
  if (!is_prime(p) || mod(p, 4) != 1) {
    throw std::invalid_argument(p.get_str() + " is not a prime = 1 mod 4");
  }

  auto recover = [&](const Nat& h) -> std::optional<SmithResult> {
    auto cf = Antenaresis::expand(p, h);
    const long len = cf.k() + 1;
    if (!is_palindromic(cf) || len % 2 != 0) return std::nullopt;
    const long half = len / 2;
    SmithResult r{h, cf.A(half - 1), cf.A(half - 2)};
    if (r.x * r.x + r.y * r.y != p) return std::nullopt;
    return r;
  };

  if (p < (Nat(1) << 62)) {
    // Native scan; only the hit is rebuilt as a full trace.
    const std::uint64_t pp = p.get_ui();
    std::vector<std::uint64_t> qs;
    for (std::uint64_t h = 2; 2 * h < pp; ++h) {
      qs.clear();
      std::uint64_t a = pp, b = h;
      while (b != 0) {
        qs.push_back(a / b);
        std::uint64_t r = a % b;
        a = b;
        b = r;
      }
      if (qs.size() % 2 != 0 || !std::equal(qs.begin(), qs.end(), qs.rbegin())) continue;
      if (auto r = recover(Nat(h))) return *r;
    }
  } else {
    for (Nat h = 2; 2 * h < p; ++h) {
      if (auto r = recover(h)) return *r;
    }
  }
  throw std::logic_error("no palindromic expansion found for " + p.get_str());
}

}  // namespace quadrep
