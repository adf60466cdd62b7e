#include "quadrep/factor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace quadrep {

namespace {

constexpr unsigned kTrialBound = 10'000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const Nat& n, const Nat& n_minus_1, const Nat& odd,
                        unsigned twos, const Nat& base) {
  Nat x = mod_pow(base, odd, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < twos; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Nat Factorization::product() const {
  Nat out = 1;
  for (const auto& [p, e] : factors) {
    Nat pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    out *= pe;
  }
  return out;
}

void Factorization::validate() const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].e == 0) throw std::invalid_argument("zero exponent in factorization");
    if (i > 0 && factors[i - 1].p >= factors[i].p) {
      throw std::invalid_argument("factorization primes not strictly increasing");
    }
    if (!is_prime(factors[i].p)) {
      throw std::invalid_argument(factors[i].p.get_str() + " is not prime");
    }
  }
  if (product() != n) {
    throw std::invalid_argument("factorization does not multiply back to " + n.get_str());
  }
}

FactorEffortExceeded::FactorEffortExceeded(Nat n, Nat unfactored)
    : std::runtime_error("factorization effort exceeded for " + n.get_str() +
                         "; unfactored part " + unfactored.get_str()),
      n_(std::move(n)),
      unfactored_(std::move(unfactored)) {}

FermatResult fermat_base2(const Nat& m) {
  if (m < 3 || mpz_even_p(m.get_mpz_t())) {
    throw std::invalid_argument("fermat_base2 needs an odd m >= 3");
  }
  return mod_pow(2, m - 1, m) == 1 ? FermatResult::probable_prime
                                   : FermatResult::composite;
}

bool is_prime(const Nat& m) {
  if (m < 2) return false;
  static constexpr std::array<unsigned, 13> kBases = {2,  3,  5,  7,  11, 13, 17,
                                                      19, 23, 29, 31, 37, 41};
  for (unsigned p : kBases) {
    if (m == p) return true;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
  }
  Nat n_minus_1 = m - 1;
  Nat odd = n_minus_1;
  unsigned twos = static_cast<unsigned>(mpz_scan1(odd.get_mpz_t(), 0));
  odd >>= twos;
  for (unsigned p : kBases) {
    if (!miller_rabin_round(m, n_minus_1, odd, twos, Nat(p))) return false;
  }
  static const Nat kDeterministicBound("3317044064679887385961981", 10);
  if (m < kDeterministicBound) return true;

  std::mt19937_64 rng(0x5eed);
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  for (int round = 0; round < 24; ++round) {
    Nat base = gen.get_z_range(m - 3) + 2;
    if (!miller_rabin_round(m, n_minus_1, odd, twos, base)) return false;
  }
  return true;
}

Nat pollard_rho(const Nat& m, std::uint64_t& budget) {
  if (m < 4 || mpz_even_p(m.get_mpz_t())) {
    throw std::invalid_argument("pollard_rho needs an odd composite");
  }
  constexpr unsigned kBatch = 64;
  const Nat start = m;

  for (unsigned long c = 1; c < 1000; ++c) {
    auto step = [&](const Nat& v) {
      Nat r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      return r;
    };
    Nat y = 2, x, ys, g = 1, acc = 1;
    std::uint64_t r = 1;
    while (g == 1) {
      x = y;
      if (budget < r) throw FactorEffortExceeded(start, m);
      budget -= r;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t batch = std::min<std::uint64_t>(kBatch, r - k);
        if (budget < batch) throw FactorEffortExceeded(start, m);
        budget -= batch;
        for (std::uint64_t i = 0; i < batch; ++i) {
          y = step(y);
          Nat diff = abs(x - y);
          acc = acc * diff % m;
        }
        g = gcd(acc, m);
        k += batch;
      }
      r *= 2;
    }
    if (g == m) {
      // Batch overshot; replay one step at a time from the saved point.
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), m);
      } while (g == 1);
    }
    if (g != m) return g;
  }
  throw FactorEffortExceeded(start, m);
}

Nat pollard_rho(const Nat& m) {
  std::uint64_t budget = FactorOptions{}.effort;
  return pollard_rho(m, budget);
}

namespace {

void split(const Nat& n, unsigned multiplicity, std::map<Nat, unsigned>& out,
           std::uint64_t& budget, const Nat& original) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += multiplicity;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    // Smallest base b with b^e = n: try the largest exponent first.
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long e = bits; e >= 2; --e) {
      Nat root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        split(root, multiplicity * static_cast<unsigned>(e), out, budget, original);
        return;
      }
    }
  }
  Nat d;
  try {
    d = pollard_rho(n, budget);
  } catch (const FactorEffortExceeded&) {
    throw FactorEffortExceeded(original, n);
  }
  split(d, multiplicity, out, budget, original);
  split(n / d, multiplicity, out, budget, original);
}

}  // namespace

Factorization factorize(const Nat& m, const FactorOptions& options) {
  if (m < 2) throw std::invalid_argument("factorize needs m >= 2");
  std::map<Nat, unsigned> found;
  Nat rest = m;
  if (rest.fits_ulong_p()) {
    unsigned long r = rest.get_ui();
    for (unsigned long p : small_primes()) {
      if (p * p > r) break;
      unsigned e = 0;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      if (e > 0) found[Nat(p)] = e;
    }
    rest = r;
  } else {
    for (unsigned p : small_primes()) {
      if (Nat(p) * p > rest) break;
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      if (e > 0) found[Nat(p)] = e;
    }
  }
  std::uint64_t budget = options.effort;
  split(rest, 1, found, budget, m);

  Factorization f;
  f.n = m;
  for (auto& [p, e] : found) f.factors.push_back({p, e});
  f.certified = true;
  if (f.product() != m) throw std::logic_error("factorization does not multiply back");
  return f;
}

}  // namespace quadrep
