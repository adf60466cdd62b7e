#include "quadrep/contfrac.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace quadrep {

namespace {

void check_index(long j, long lo, long hi, const char* what) {
  if (j < lo || j > hi) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(j) +
                            " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
}

}  // namespace

Antenaresis Antenaresis::expand(const Nat& a, const Nat& b) {
  require_nat(a, "numerator");
  if (b < 2) throw std::invalid_argument("denominator must be >= 2");

  Antenaresis cf;
  // Euclid takes at most ~1.44 log2(b) + 2 steps.
  const std::size_t steps = 3 * mpz_sizeinbase(b.get_mpz_t(), 2) / 2 + 4;
  cf.quotients_.reserve(steps);
  cf.remainders_.reserve(steps + 2);
  cf.numerators_.reserve(steps + 2);
  cf.denominators_.reserve(steps + 2);
  cf.remainders_.push_back(a);
  cf.remainders_.push_back(b);
  cf.numerators_.emplace_back(0);
  cf.numerators_.emplace_back(1);
  cf.denominators_.emplace_back(1);
  cf.denominators_.emplace_back(0);

  // remainders_[j + 1] holds r(j); numerators_[j + 2] holds A(j).
  while (sgn(cf.remainders_.back()) != 0) {
    const std::size_t n = cf.remainders_.size();
    const Nat& prev = cf.remainders_[n - 2];
    const Nat& cur = cf.remainders_[n - 1];
    Nat q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), prev.get_mpz_t(), cur.get_mpz_t());

    const std::size_t c = cf.numerators_.size();
    Int next_a = q * cf.numerators_[c - 1] + cf.numerators_[c - 2];
    Nat next_b = q * cf.denominators_[c - 1] + cf.denominators_[c - 2];

    cf.quotients_.push_back(std::move(q));
    cf.remainders_.push_back(std::move(rem));
    cf.numerators_.push_back(std::move(next_a));
    cf.denominators_.push_back(std::move(next_b));
  }
  return cf;
}

const Nat& Antenaresis::q(long j) const {
  check_index(j, 0, k(), "quotient");
  return quotients_[static_cast<std::size_t>(j)];
}

const Nat& Antenaresis::r(long j) const {
  check_index(j, -1, k() + 1, "remainder");
  return remainders_[static_cast<std::size_t>(j + 1)];
}

const Int& Antenaresis::A(long j) const {
  check_index(j, -2, k(), "numerator");
  return numerators_[static_cast<std::size_t>(j + 2)];
}

const Nat& Antenaresis::B(long j) const {
  check_index(j, -2, k(), "denominator");
  return denominators_[static_cast<std::size_t>(j + 2)];
}

long find_nu(const Antenaresis& cf, const Nat& m) {
  // Remainders strictly decrease from r(0) on, so the first hit is the only one.
  for (long j = 0; j <= cf.k(); ++j) {
    const Nat& next = cf.r(j + 1);
    if (next * next <= m) {
      const Nat& cur = cf.r(j);
      if (m < cur * cur) return j;
      break;
    }
  }
  throw std::invalid_argument("no index nu with r(nu+1)^2 <= " + m.get_str() +
                              " < r(nu)^2");
}

long find_mu(const Antenaresis& cf, const Nat& m) {
  for (long j = 0; j < cf.k(); ++j) {
    const Nat& cur = cf.B(j);
    const Nat& next = cf.B(j + 1);
    if (cur * cur <= m && m < next * next) return j;
  }
  throw std::invalid_argument("no index mu with B(mu)^2 <= " + m.get_str() +
                              " < B(mu+1)^2");
}

bool lemma_bound_check(const Antenaresis& cf, const Int& P, const Int& Q,
                       long lambda) {
  check_index(lambda, -1, cf.k(), "lambda");
  if (sgn(Q) == 0) return true;
  Int gap = abs(cf.a() * Q - cf.b() * P);
  if (gap >= cf.r(lambda)) return true;
  return cf.B(lambda) <= abs(Q);
}

bool lemma_bound_check(const Nat& a, const Nat& b, const Int& P, const Int& Q,
                       long lambda) {
  return lemma_bound_check(Antenaresis::expand(a, b), P, Q, lambda);
}

bool is_palindromic(const Antenaresis& cf) {
  auto qs = cf.quotients();
  if (!qs.empty() && sgn(qs.front()) == 0) qs = qs.subspan(1);
  return std::equal(qs.begin(), qs.begin() + static_cast<long>(qs.size() / 2),
                    qs.rbegin());
}

}  // namespace quadrep
