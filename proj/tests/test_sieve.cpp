#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "splf/segment_cache.hpp"
#include "splf/sieve.hpp"

using namespace splf;

TEST_CASE("primes_up_to small values") {
  CHECK(primes_up_to(10).primes == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes_up_to(2).primes == std::vector<u64>{2});
  CHECK(primes_up_to(100).count() == 25);
  CHECK_THROWS_AS(primes_up_to(1), std::domain_error);
}

TEST_CASE("primes_up_to matches trial division") {
  CHECK(primes_up_to(10000).primes == oracle::primes_td(10000));
}

TEST_CASE("primes_up_to count is monotone") {
  u64 prev = 0;
  for (u64 n : {2ull, 10ull, 100ull, 1000ull, 1001ull, 5000ull}) {
    const u64 count = primes_up_to(n).count();
    CHECK(count >= prev);
    prev = count;
  }
}

TEST_CASE("primes_up_to budget cap") {
  SieveLimits limits;
  limits.prime_table_cap = 1000;
  CHECK_THROWS_AS(primes_up_to(1001, limits), budget_error);
  CHECK_THROWS_WITH_AS(primes_up_to(1001, limits),
                       doctest::Contains("prime_table_cap"), budget_error);
}

TEST_CASE("pi lookups and range error") {
  const PrimeTable table = primes_up_to(1000);
  CHECK(pi(1, table) == 0);
  CHECK(pi(2, table) == 1);
  CHECK(pi(3, table) == 2);
  CHECK(pi(4, table) == 2);
  CHECK(pi(1000, table) == 168);
  CHECK(pi(1000, table) == oracle::primes_td(1000).size());
  CHECK_THROWS_AS(pi(1001, table), std::out_of_range);
}

TEST_CASE("lpf_segment conventions and spec values") {
  const PrimeTable base = primes_up_to(2000);
  const LpfSegment seg = lpf_segment(1, 50, base);
  CHECK(seg.at(1) == 1);     // P+(1) = 1 by convention
  CHECK(seg.at(12) == 3);    // 12 = 2^2 * 3
  CHECK(seg.at(2) == 2);
  CHECK(seg.at(49) == 7);

  const LpfSegment pow2 = lpf_segment(u64(1) << 20, (u64(1) << 20) + 1, base);
  CHECK(pow2.at(u64(1) << 20) == 2);

  CHECK_THROWS_AS(lpf_segment(0, 10, base), std::invalid_argument);
  CHECK_THROWS_AS(lpf_segment(5, 5, base), std::invalid_argument);
  CHECK_THROWS_AS(lpf_segment(10, 5, base), std::invalid_argument);
  const PrimeTable tiny = primes_up_to(3);
  CHECK_THROWS_AS(lpf_segment(1, 1000, tiny), std::invalid_argument);
  SieveLimits limits;
  limits.segment_cap = 16;
  CHECK_THROWS_AS(lpf_segment(1, 100, base, limits), budget_error);
}

TEST_CASE("lpf_segment matches trial division") {
  const PrimeTable base = primes_up_to(1024);
  const LpfSegment seg = lpf_segment(1, 20000, base);
  for (u64 n = 1; n < 20000; ++n) CHECK(seg.at(n) == oracle::lpf_td(n));
}

TEST_CASE("lpf of a prime is the prime itself") {
  const PrimeTable base = primes_up_to(1024);
  const LpfSegment seg = lpf_segment(100000, 101000, base);
  const auto flags = prime_flags(100000, 101000, base);
  for (u64 n = 100000; n < 101000; ++n)
    if (flags[n - 100000]) CHECK(seg.at(n) == n);
}

TEST_CASE("lpf divides n and random consistency up to 1e6") {
  const PrimeTable base = primes_up_to(1024);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> pick(2, 1000000 - 1);
  for (int i = 0; i < 400; ++i) {
    const u64 n = pick(rng);
    const LpfSegment seg = lpf_segment(n, n + 1, base);
    CHECK(n % seg.at(n) == 0);
    CHECK(seg.at(n) == oracle::lpf_td(n));
  }
}

TEST_CASE("adjacent segments concatenate to the union") {
  const PrimeTable base = primes_up_to(1024);
  const LpfSegment left = lpf_segment(50000, 52000, base);
  const LpfSegment right = lpf_segment(52000, 54000, base);
  const LpfSegment whole = lpf_segment(50000, 54000, base);
  for (u64 n = 50000; n < 52000; ++n) CHECK(whole.at(n) == left.at(n));
  for (u64 n = 52000; n < 54000; ++n) CHECK(whole.at(n) == right.at(n));
}

TEST_CASE("prime_flags window agrees with trial division") {
  const PrimeTable base = primes_up_to(1024);
  const auto flags = prime_flags(1, 3000, base);
  for (u64 n = 1; n < 3000; ++n) CHECK(static_cast<bool>(flags[n - 1]) == oracle::is_prime_td(n));
  const auto window = prime_flags(999900, 1000100, base);
  for (u64 n = 999900; n < 1000100; ++n)
    CHECK(static_cast<bool>(window[n - 999900]) == oracle::is_prime_td(n));
}

TEST_CASE("PrimalityMap agrees with trial division") {
  const PrimalityMap map(50000);
  for (u64 n = 0; n <= 2000; ++n) CHECK(map.is_prime(n) == oracle::is_prime_td(n));
  CHECK(map.is_prime(49999));  // prime
  CHECK(!map.is_prime(49997));
  CHECK_THROWS_AS(map.is_prime(50001), std::out_of_range);
  SieveLimits limits;
  limits.bitmap_cap = 100;
  CHECK_THROWS_AS(PrimalityMap(101, limits), budget_error);
}

TEST_CASE("for_each_prime streams the same primes as the table") {
  std::vector<u64> streamed;
  for_each_prime(0, 10001, [&](u64 p) { streamed.push_back(p); });
  CHECK(streamed == primes_up_to(10000).primes);

  std::vector<u64> window;
  for_each_prime(1000, 1100, [&](u64 p) { window.push_back(p); });
  for (u64 p : window) CHECK(oracle::is_prime_td(p));
  CHECK(window.front() == 1009);
  CHECK(window.back() == 1097);
}

TEST_CASE("segment cache round trip and rejection of bad files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "splf_cache_test";
  fs::create_directories(dir);
  const PrimeTable base = primes_up_to(1024);
  const LpfSegment seg = lpf_segment(777, 1777, base);
  const fs::path file = dir / segment_cache_filename(777, 1777);

  REQUIRE(write_segment_cache(file, seg));
  const auto back = read_segment_cache(file, 777, 1777);
  REQUIRE(back.has_value());
  CHECK(back->lpf == seg.lpf);

  CHECK(!read_segment_cache(file, 778, 1777).has_value());   // wrong bounds
  CHECK(!read_segment_cache(dir / "missing.splf", 777, 1777).has_value());

  {
    std::ofstream corrupt(file, std::ios::binary | std::ios::trunc);
    corrupt << "SPLGxxxxxxxxxxxxxxxxxxx";
  }
  CHECK(!read_segment_cache(file, 777, 1777).has_value());
  fs::remove_all(dir);
}
