#include <random>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "splf/exponent.hpp"

using splf::Exponent;
using splf::u64;

TEST_CASE("Exponent::of validates and reduces") {
  const Exponent c = Exponent::of(50, 100);
  CHECK(c.num == 1);
  CHECK(c.den == 2);
  CHECK(Exponent::of(16, 17).num == 16);
  CHECK_THROWS_AS(Exponent::of(0, 2), std::domain_error);
  CHECK_THROWS_AS(Exponent::of(2, 2), std::domain_error);
  CHECK_THROWS_AS(Exponent::of(3, 2), std::domain_error);
  CHECK_THROWS_AS(Exponent::of(1, 0), std::domain_error);
}

TEST_CASE("Exponent::parse accepts decimals and fractions") {
  CHECK(Exponent::parse("0.89") == Exponent::of(89, 100));
  CHECK(Exponent::parse(".5") == Exponent::of(1, 2));
  CHECK(Exponent::parse("0.500") == Exponent::of(1, 2));
  CHECK(Exponent::parse("16/17") == Exponent::of(16, 17));
  CHECK_THROWS_AS(Exponent::parse("0.8925"), std::domain_error);  // > 3 places
  CHECK_THROWS_AS(Exponent::parse("1.5"), std::domain_error);
  CHECK_THROWS_AS(Exponent::parse("five"), std::domain_error);
  CHECK_THROWS_AS(Exponent::parse("5/4"), std::domain_error);
}

TEST_CASE("Exponent ordering is exact") {
  CHECK(Exponent::of(1, 2) < Exponent::of(2, 3));
  CHECK(!(Exponent::of(2, 3) < Exponent::of(1, 2)));
  CHECK(Exponent::of(16, 17) < Exponent::of(17, 18));
  CHECK(!(Exponent::of(499, 1000) < Exponent::of(499, 1000)));
}

TEST_CASE("compare_pow matches plain bignum comparison") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<u64> bases(1, 1u << 20);
  std::uniform_int_distribution<u64> exps(1, 40);
  for (int i = 0; i < 3000; ++i) {
    const u64 a = bases(rng), b = bases(rng), ea = exps(rng), eb = exps(rng);
    CHECK(splf::compare_pow(a, ea, b, eb) == oracle::compare_pow_mpz(a, ea, b, eb));
  }
}

TEST_CASE("compare_pow exact ties and near ties") {
  CHECK(splf::compare_pow(32, 2, 2, 10) == 0);   // 32^2 = 2^10
  CHECK(splf::compare_pow(32, 2, 2, 11) == -1);
  CHECK(splf::compare_pow(32, 2, 2, 9) == 1);
  CHECK(splf::compare_pow(1000, 3, 10, 9) == 0);  // 10^9 both ways
  // one off either side of a tie, far beyond double precision
  CHECK(splf::compare_pow(1000003, 5, 1000003, 5) == 0);
  CHECK(splf::compare_pow((u64(1) << 31) - 1, 31, 2, 961) < 0);  // (2^31-1)^31 < 2^961
}

TEST_CASE("holds_threshold spec values") {
  CHECK(splf::holds_threshold(2, 3, Exponent::of(1, 2)));        // 4 >= 3
  CHECK(!splf::holds_threshold(2, 5, Exponent::of(1, 2)));       // 4 < 5
  CHECK(splf::holds_threshold(11, 23, Exponent::of(2, 3)));      // 1331 >= 529
  CHECK(!splf::holds_threshold(1, 2, Exponent::of(1, 2)));       // P+(1) = 1 never counts
  CHECK_THROWS_AS(splf::holds_threshold(2, 1, Exponent::of(1, 2)), std::domain_error);
}

TEST_CASE("min_q_at_least_pow is the exact ceiling") {
  CHECK(splf::min_q_at_least_pow(10000, Exponent::of(1, 2)) == 100);  // exact square
  CHECK(splf::min_q_at_least_pow(100, Exponent::of(1, 2)) == 10);
  CHECK(splf::min_q_at_least_pow(101, Exponent::of(1, 2)) == 11);
  CHECK(splf::min_q_at_least_pow(1, Exponent::of(1, 2)) == 1);

  // cross-check against a linear scan over small x
  for (u64 x : {100ull, 101ull, 997ull, 4096ull}) {
    for (auto [num, den] : {std::pair<u64, u64>{1, 2}, {2, 3}, {3, 4}, {9, 10}}) {
      const Exponent c = Exponent::of(num, den);
      const u64 q0 = splf::min_q_at_least_pow(x, c);
      CHECK(oracle::compare_pow_mpz(q0, c.den, x, c.num) >= 0);
      if (q0 > 1) CHECK(oracle::compare_pow_mpz(q0 - 1, c.den, x, c.num) < 0);
    }
  }
}
