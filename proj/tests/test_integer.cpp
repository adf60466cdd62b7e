#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "quadrep/integer.hpp"

using namespace quadrep;

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(144) == 12);
  CHECK(isqrt(435629) == 660);
  CHECK(isqrt(Nat("58674434381", 10)) == 242228);
  CHECK_THROWS_AS(isqrt(-1), std::invalid_argument);

  SUBCASE("floor property up to 10^6") {
    for (long n = 0; n <= 1'000'000; ++n) {
      Nat s = isqrt(n);
      REQUIRE(s * s <= n);
      REQUIRE((s + 1) * (s + 1) > n);
    }
  }

  SUBCASE("agrees with mpz_sqrt on large inputs") {
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(7);
    for (int i = 0; i < 2000; ++i) {
      Nat n = gen.get_z_bits(1 + i % 300);
      Nat ref;
      mpz_sqrt(ref.get_mpz_t(), n.get_mpz_t());
      REQUIRE(isqrt(n) == ref);
    }
  }
}

TEST_CASE("perfect_square") {
  CHECK(perfect_square(76729) == Nat(277));
  CHECK_FALSE(perfect_square(2).has_value());
  CHECK(perfect_square(0) == Nat(0));
  CHECK_FALSE(perfect_square(-4).has_value());
}

TEST_CASE("ext_gcd") {
  auto e = ext_gcd(367, 1187);
  CHECK(e.g == 1);
  CHECK(e.s == 207);
  CHECK(e.t == -64);

  auto z = ext_gcd(0, 5);
  CHECK(z.g == 5);
  CHECK(z.s == 0);
  CHECK(z.t == 1);

  auto h = ext_gcd(12, 18);
  CHECK(h.g == 6);
  CHECK(h.s * 12 + h.t * 18 == 6);

  CHECK_THROWS_AS(ext_gcd(0, 0), std::invalid_argument);

  SUBCASE("Bezout identity on random pairs up to 10^6") {
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> dist(0, 1'000'000);
    for (int i = 0; i < 100'000; ++i) {
      long a = dist(rng), b = dist(rng);
      if (a == 0 && b == 0) continue;
      auto r = ext_gcd(a, b);
      REQUIRE(r.s * a + r.t * b == r.g);
      REQUIRE(r.g == gcd(Int(a), Int(b)));
      if (a) REQUIRE(a % r.g == 0);
      if (b) REQUIRE(b % r.g == 0);
    }
  }
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(2, 435628, 435629) != 1);
  Nat w1 = mod_pow(-5, 92, 367);
  CHECK((w1 == 27 || w1 == 340));
  CHECK(mod(w1 * w1 + 5, 367) == 0);
  CHECK(mod_pow(12345, 0, 97) == 1);
  CHECK(mod_pow(3, 5, 1) == 0);

  SUBCASE("agrees with repeated multiplication for small moduli") {
    for (unsigned long m = 1; m <= 17; ++m) {
      for (unsigned long base = 0; base < 256; base += 3) {
        unsigned long acc = 1 % m;
        for (unsigned long e = 0; e < 256; ++e) {
          REQUIRE(mod_pow(base, e, m) == acc);
          acc = acc * base % m;
        }
      }
    }
  }
}

TEST_CASE("mod and mod_inverse") {
  CHECK(mod(-7, 9241) == 9234);
  CHECK(mod_inverse(54, 367 * 367) * 54 % (367 * 367) == 1);
  CHECK_THROWS_AS(mod_inverse(6, 9), std::domain_error);
}

TEST_CASE("parse_int") {
  CHECK(parse_int("-7") == -7);
  CHECK(parse_int("+12") == 12);
  CHECK(parse_int("58674434381") == Nat("58674434381", 10));
  CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
}
