#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "quadrep/compose.hpp"
#include "quadrep/oracle.hpp"

using namespace quadrep;

namespace {

using Pair = std::pair<Nat, Nat>;

std::vector<Pair> pairs(std::vector<Representation> reps, bool proper_only = false) {
  canonicalize(reps);
  std::vector<Pair> out;
  for (const auto& r : reps) {
    if (!proper_only || r.proper) out.emplace_back(r.x, r.y);
  }
  return out;
}

bool contains(const std::vector<Representation>& reps, long x, long y) {
  return std::any_of(reps.begin(), reps.end(),
                     [&](const Representation& r) { return r.x == x && r.y == y; });
}

}  // namespace

TEST_CASE("compose_pair") {
  auto a = Representation::make(362, 27, 5, 367 * 367);
  auto b = Representation::make(228, 277, 5, 435629);

  auto minus = compose_pair(a, b, CrossSign::minus);
  CHECK(minus.x == 119931);
  CHECK(minus.y == 94118);
  CHECK(minus.proper);
  CHECK(minus.m == Nat("58674434381", 10));

  auto plus = compose_pair(a, b, CrossSign::plus);
  CHECK(plus.x == 45141);
  CHECK(plus.y == 106430);
  CHECK_FALSE(plus.proper);
  CHECK(gcd(plus.x, plus.y) == 367);

  auto two = Representation::make(2, 0, 7, 4);
  auto p = Representation::make(13, 36, 7, 9241);
  auto scaled = compose_pair(two, p, CrossSign::plus);
  CHECK(scaled.x == 26);
  CHECK(scaled.y == 72);
  CHECK_FALSE(scaled.proper);
  CHECK(scaled.m == 4 * 9241);

  CHECK_THROWS_AS(compose_pair(a, p, CrossSign::plus), std::invalid_argument);

  SUBCASE("norm identity for both signs") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> comp(0, 1000), dd(1, 30);
    for (int i = 0; i < 20'000; ++i) {
      long d = dd(rng);
      long x1 = comp(rng), y1 = comp(rng), x2 = comp(rng), y2 = comp(rng);
      auto r1 = Representation::make(x1, y1, d, x1 * x1 + d * y1 * y1);
      auto r2 = Representation::make(x2, y2, d, x2 * x2 + d * y2 * y2);
      for (auto s : {CrossSign::plus, CrossSign::minus}) {
        REQUIRE_NOTHROW(compose_pair(r1, r2, s).check());
      }
    }
  }
}

TEST_CASE("prime_power_rep") {
  auto sq = prime_power_rep(367, 2, 5);
  auto has = [&](long x, long y) {
    return std::any_of(sq.begin(), sq.end(), [&](const PrimePowerRep& r) {
      return r.rep.x == x && r.rep.y == y;
    });
  };
  CHECK(has(362, 27));
  CHECK(has(367, 0));
  for (const auto& r : sq) {
    CHECK(r.rep.m == 367 * 367);
    if (r.kind == PrimePowerKind::trivial_square) CHECK(r.rep.y == 0);
  }

  auto p = prime_power_rep(9241, 1, 7);
  REQUIRE(p.size() == 1);
  CHECK(p[0].rep.x == 13);
  CHECK(p[0].rep.y == 36);
  CHECK(p[0].kind == PrimePowerKind::cornacchia);

  auto two = prime_power_rep(2, 2, 7);
  REQUIRE(two.size() == 1);
  CHECK(two[0].rep.x == 2);
  CHECK(two[0].rep.y == 0);
  CHECK(two[0].kind == PrimePowerKind::two_power_enum);

  // 367 itself is not of the form x^2 + 5y^2.
  CHECK(prime_power_rep(367, 1, 5).empty());
  CHECK_THROWS_AS(prime_power_rep(5, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_rep(9, 1, 5), std::invalid_argument);

  SUBCASE("matches the oracle for every small prime power") {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 29L, 41L}) {
      for (unsigned e = 1; e <= 9; ++e) {
        Nat pe;
        mpz_pow_ui(pe.get_mpz_t(), Nat(p).get_mpz_t(), e);
        if (pe > 10'000'000) break;
        for (long d = 1; d <= 12; ++d) {
          if (d % p == 0) continue;
          std::vector<Representation> got;
          for (auto& r : prime_power_rep(p, e, d)) got.push_back(r.rep);
          REQUIRE(pairs(got) == pairs(brute_solutions(d, pe)));
        }
      }
    }
  }
}

TEST_CASE("solve_general on the worked examples") {
  auto ex1 = solve_general(ProblemSpec{5, 435629});
  CHECK(pairs(ex1, true) == std::vector<Pair>{{123, 290}, {228, 277}});

  auto ex2 = solve_general_report(ProblemSpec{7, 36964});
  CHECK(pairs(ex2.all) == std::vector<Pair>{{26, 72}});
  CHECK_FALSE(ex2.all[0].proper);
  CHECK(ex2.proper.empty());

  auto big = solve_general_report(ProblemSpec{5, Nat("58674434381", 10)});
  CHECK(big.squarefree_part == 435629);
  CHECK(contains(big.composed, 119931, 94118));
  CHECK(contains(big.all, 119931, 94118));
  CHECK(contains(big.composed, 45141, 106430));
  CHECK(pairs(big.all) == pairs(brute_solutions(5, Nat("58674434381", 10))));
}

TEST_CASE("solve_general consistency with the oracle and Cornacchia") {
  for (long m = 2; m <= 5000; ++m) {
    auto f = factorize(m);
    for (long d = 1; d <= 10; ++d) {
      if (gcd(Int(d), Int(m)) != 1) continue;
      ProblemSpec spec{d, m};
      auto general = solve_general(spec);
      auto oracle = brute_solutions(d, m);
      REQUIRE(pairs(general, true) == pairs(oracle, true));
      REQUIRE(pairs(general, true) == pairs(solve_proper(spec, f)));
      auto all = pairs(general);
      auto want = pairs(oracle);
      REQUIRE(std::includes(want.begin(), want.end(), all.begin(), all.end()));
    }
  }
}

TEST_CASE("smith_two_squares") {
  auto s13 = smith_two_squares(13);
  CHECK(s13.h == 5);
  CHECK(std::minmax(s13.x, s13.y) == std::minmax(Nat(2), Nat(3)));

  auto s5 = smith_two_squares(5);
  CHECK(s5.h == 2);
  CHECK(std::minmax(s5.x, s5.y) == std::minmax(Nat(1), Nat(2)));

  auto s29 = smith_two_squares(29);
  CHECK(s29.h == 12);
  CHECK(std::minmax(s29.x, s29.y) == std::minmax(Nat(2), Nat(5)));

  CHECK_THROWS_AS(smith_two_squares(7), std::invalid_argument);
  CHECK_THROWS_AS(smith_two_squares(21), std::invalid_argument);

  SUBCASE("primes up to 2000") {
    for (long p = 5; p <= 2000; p += 4) {
      if (!is_prime(p)) continue;
      auto r = smith_two_squares(p);
      REQUIRE(r.x * r.x + r.y * r.y == p);
      REQUIRE(mod(r.h * r.h + 1, p) == 0);
    }
  }
}
