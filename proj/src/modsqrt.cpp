#include "quadrep/modsqrt.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrep {

namespace {

void require_odd_prime(const Nat& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw std::invalid_argument(p.get_str() + " is not an odd prime");
  }
}

void verify_root(const Nat& r, const Int& a, const Nat& m) {
  if (mod(r * r - a, m) != 0) {
    throw std::logic_error("square root self-check failed: " + r.get_str() +
                           "^2 != " + a.get_str() + " mod " + m.get_str());
  }
}

Residuosity classify(const Nat& a, const Nat& p) {
  if (a == 0) return Residuosity::zero;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? Residuosity::residue
                                         : Residuosity::nonresidue;
}

// Inputs already reduced; p an odd prime; a a nonzero residue.
Nat lagrange_root(const Nat& a, const Nat& p) {
  Nat r = mod_pow(a, (p + 1) / 4, p);
  if (r * r % p != a) {
    throw std::domain_error(a.get_str() + " is not a square mod " + p.get_str());
  }
  return r;
}

Nat tonelli_shanks(const Nat& a, const Nat& p) {
  if (classify(a, p) == Residuosity::nonresidue) {
    throw std::domain_error(a.get_str() + " is not a square mod " + p.get_str());
  }
  if (a == 0) return 0;
  // p - 1 = odd * 2^s
  Nat odd = p - 1;
  auto s = static_cast<unsigned long>(mpz_scan1(odd.get_mpz_t(), 0));
  odd >>= s;

  Nat z = 2;
  while (classify(z, p) != Residuosity::nonresidue) ++z;

  Nat c = mod_pow(z, odd, p);
  Nat t = mod_pow(a, odd, p);
  Nat r = mod_pow(a, (odd + 1) / 2, p);
  unsigned long m = s;
  while (t != 1) {
    // least i with t^(2^i) = 1
    unsigned long i = 0;
    Nat t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Nat b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

Nat root_mod_odd_prime(const Nat& a, const Nat& p) {
  if (mpz_tstbit(p.get_mpz_t(), 1) != 0) return lagrange_root(a, p);  // p = 3 mod 4
  return tonelli_shanks(a, p);
}

Nat lift(Nat r, const Int& a, const Nat& p, unsigned e) {
  Nat pk = p;
  for (unsigned k = 1; k < e; ++k) {
    pk *= p;
    Nat inv = mod_inverse(2 * r, pk);
    r = mod(r - (r * r - a) * inv, pk);
  }
  return r;
}

// Roots of an odd target modulo 2^e, any e >= 1.
std::vector<Nat> two_adic_roots(const Int& a, unsigned e) {
  constexpr unsigned kEnumerated = 6;
  if (e <= kEnumerated) return sqrt_mod_2power(a, e);
  auto seeds = sqrt_mod_2power(a, kEnumerated);
  if (seeds.empty()) return {};
  Nat r = seeds.front();
  for (unsigned k = kEnumerated; k < e; ++k) {
    Nat next = Nat(1) << (k + 1);
    if (mod(r * r - a, next) != 0) r += Nat(1) << (k - 1);
  }
  Nat q = Nat(1) << e;
  Nat half = Nat(1) << (e - 1);
  std::vector<Nat> out = {r, q - r, mod(r + half, q), mod(q - r + half, q)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Residuosity euler_residue(const Int& a, const Nat& p) {
  require_odd_prime(p);
  return classify(mod(a, p), p);
}

Nat sqrt_3mod4(const Int& a, const Nat& p) {
  require_odd_prime(p);
  if (mpz_tstbit(p.get_mpz_t(), 1) == 0) {
    throw std::invalid_argument(p.get_str() + " is not 3 mod 4");
  }
  Nat r = lagrange_root(mod(a, p), p);
  verify_root(r, a, p);
  return r;
}

Nat tonelli(const Int& a, const Nat& p) {
  require_odd_prime(p);
  Nat r = tonelli_shanks(mod(a, p), p);
  verify_root(r, a, p);
  return r;
}

Nat hensel_lift(const Nat& r, const Int& a, const Nat& p, unsigned e) {
  require_odd_prime(p);
  if (e < 1) throw std::invalid_argument("hensel_lift needs e >= 1");
  if (mod(r, p) == 0) {
    throw std::domain_error("cannot lift: p divides 2r");
  }
  if (mod(r * r - a, p) != 0) {
    throw std::domain_error(r.get_str() + " is not a square root of " +
                            a.get_str() + " mod " + p.get_str());
  }
  Nat pe;
  mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
  if (e == 1) return r;
  Nat out = lift(mod(r, p), a, p, e);
  verify_root(out, a, pe);
  return out;
}

std::vector<Nat> sqrt_mod_2power(const Int& a, unsigned e) {
  if (e < 1 || e > 6) {
    throw std::invalid_argument("sqrt_mod_2power supports 1 <= e <= 6");
  }
  const unsigned long q = 1ul << e;
  const Nat target = mod(a, Nat(q));
  const unsigned long t = target.get_ui();
  std::vector<Nat> out;
  for (unsigned long r = 0; r < q; ++r) {
    if ((r * r) % q == t) out.emplace_back(r);
  }
  return out;
}

Nat normalize_root(const Nat& r, const Nat& m) {
  if (sgn(r) <= 0 || r >= m) {
    throw std::invalid_argument("root must lie in (0, m)");
  }
  return 2 * r >= m ? r : m - r;
}

RootSet sqrt_mod(const Int& a, const Nat& m, const Factorization& f) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  if (f.n != m || f.product() != m) {
    throw std::invalid_argument("factorization does not match modulus " + m.get_str());
  }
  if (gcd(a, m) != 1) {
    throw std::invalid_argument(a.get_str() + " is not coprime to " + m.get_str());
  }

  RootSet out{m, a, {}};
  // Incremental CRT: `partial` holds all roots modulo `acc`.
  std::vector<Nat> partial = {Nat(0)};
  Nat acc = 1;
  for (const auto& [p, e] : f.factors) {
    Nat q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
    std::vector<Nat> local;
    if (p == 2) {
      local = two_adic_roots(a, e);
    } else {
      Nat ap = mod(a, p);
      if (classify(ap, p) != Residuosity::residue) return out;
      Nat r = lift(root_mod_odd_prime(ap, p), a, p, e);
      local = {r, q - r};
    }
    if (local.empty()) return out;

    Nat inv = mod_inverse(acc, q);
    std::vector<Nat> next;
    next.reserve(partial.size() * local.size());
    for (const Nat& x : partial) {
      for (const Nat& r : local) {
        next.push_back(x + acc * mod((r - x) * inv, q));
      }
    }
    partial = std::move(next);
    acc *= q;
  }

  for (const Nat& x : partial) {
    verify_root(x, a, m);
    out.roots.push_back(normalize_root(x, m));
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

RootSet sqrt_minus_d_mod_m(const Nat& d, const Nat& m, const Factorization& f) {
  require_nat(d, "d");
  if (gcd(d, m) != 1) {
    throw std::invalid_argument("gcd(d, m) must be 1");
  }
  return sqrt_mod(-Int(d), m, f);
}

}  // namespace quadrep
