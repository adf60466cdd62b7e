#pragma once

// Euclidean division chain of a pair (a, b) with its full trace: quotients,
// remainders and convergents. Indices follow the classical subscripts,
// including the seed entries at -2 and -1:
//
//   r(-1) = a, r(0) = b, r(j-1) = q(j) r(j) + r(j+1), r(k+1) = 0
//   A(-2) = 0, A(-1) = 1, B(-2) = 1, B(-1) = 0
//   A(j) = q(j) A(j-1) + A(j-2), B(j) = q(j) B(j-1) + B(j-2)

#include <cstddef>
#include <span>
#include <vector>

#include "quadrep/integer.hpp"

namespace quadrep {

class Antenaresis {
 public:
  // Requires b >= 2, a >= 0. Throws std::invalid_argument otherwise.
  static Antenaresis expand(const Nat& a, const Nat& b);

  const Nat& a() const { return remainders_[0]; }
  const Nat& b() const { return remainders_[1]; }

  // Index of the last step; r(k) = gcd(a, b).
  long k() const { return static_cast<long>(quotients_.size()) - 1; }

  // 0 <= j <= k
  const Nat& q(long j) const;
  // -1 <= j <= k + 1
  const Nat& r(long j) const;
  // -2 <= j <= k
  const Int& A(long j) const;
  const Nat& B(long j) const;

  std::span<const Nat> quotients() const { return quotients_; }
  // r(-1) .. r(k+1)
  std::span<const Nat> remainders() const { return remainders_; }
  // A(-2) .. A(k)
  std::span<const Int> numerators() const { return numerators_; }
  // B(-2) .. B(k)
  std::span<const Nat> denominators() const { return denominators_; }

 private:
  Antenaresis() = default;

  std::vector<Nat> quotients_;
  std::vector<Nat> remainders_;
  std::vector<Int> numerators_;
  std::vector<Nat> denominators_;
};

// The index nu with r(nu+1)^2 <= m < r(nu)^2, searched over j >= 0.
// Throws std::invalid_argument if no index qualifies.
long find_nu(const Antenaresis& cf, const Nat& m);

// The index mu with B(mu)^2 <= m < B(mu+1)^2, 0 <= mu < k.
// Throws std::invalid_argument if no index qualifies.
long find_mu(const Antenaresis& cf, const Nat& m);

// Evaluates the best-approximation implication for one instance:
//   |aQ - bP| < r(lambda) and Q != 0   implies   B(lambda) <= |Q|.
// Returns false only if the implication fails. Throws std::out_of_range
// unless -1 <= lambda <= k.
bool lemma_bound_check(const Nat& a, const Nat& b, const Int& P, const Int& Q,
                       long lambda);
bool lemma_bound_check(const Antenaresis& cf, const Int& P, const Int& Q,
                       long lambda);

// True iff the quotient sequence, after dropping a leading zero, reads the
// same reversed.
bool is_palindromic(const Antenaresis& cf);

}  // namespace quadrep
