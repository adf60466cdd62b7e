#pragma once

// Primality testing and factorization at desk scale (inputs up to ~80 bits).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quadrep/integer.hpp"

namespace quadrep {

struct PrimePower {
  Nat p;
  unsigned e = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Nat n;
  std::vector<PrimePower> factors;  // p strictly increasing
  bool certified = false;

  // Product of p^e over all factors.
  Nat product() const;
  // Throws std::invalid_argument unless the factors are sorted, have e >= 1,
  // pass is_prime, and multiply back to n.
  void validate() const;
};

enum class FermatResult { composite, probable_prime };

// 2^(m-1) mod m test. Fermat pseudoprimes such as 341 pass.
// Requires m odd and m >= 3.
FermatResult fermat_base2(const Nat& m);

// Deterministic Miller-Rabin below 3.3e24 (bases 2..41); above that,
// additional bases from a fixed-seed generator.
bool is_prime(const Nat& m);

struct FactorOptions {
  // Total Pollard rho iterations allowed across the whole factorization.
  std::uint64_t effort = 50'000'000;
};

class FactorEffortExceeded : public std::runtime_error {
 public:
  FactorEffortExceeded(Nat n, Nat unfactored);
  const Nat& n() const { return n_; }
  const Nat& unfactored() const { return unfactored_; }

 private:
  Nat n_;
  Nat unfactored_;
};

// A nontrivial divisor of an odd composite m that is not a prime power.
// Brent's cycle detection on x^2 + c from x0 = 2, c = 1, 2, ... on failure.
// `budget` is decremented by the iterations spent; throws
// FactorEffortExceeded when it runs out.
Nat pollard_rho(const Nat& m, std::uint64_t& budget);
Nat pollard_rho(const Nat& m);

// Trial division below 10^4, perfect-power detection, then Pollard rho with
// Miller-Rabin certification of every prime.
Factorization factorize(const Nat& m, const FactorOptions& options = {});

}  // namespace quadrep
