#pragma once

#include <algorithm>
#include <vector>

#include "splf/errors.hpp"
#include "splf/types.hpp"

namespace splf {

// Resource caps. Every routine that allocates proportionally to its input
// validates against one of these and raises budget_error naming the cap,
// so a typo'd limit fails fast instead of swapping the machine.
struct SieveLimits {
  u64 prime_table_cap = u64(1) << 32;  // primes_up_to: max limit
  u64 segment_cap = u64(1) << 25;      // lpf_segment: max hi - lo
  u64 bitmap_cap = u64(1) << 31;       // PrimalityMap: max limit
  u64 factor_cap = u64(1) << 26;       // smallest-prime-factor tables: max size
};

constexpr u64 kDefaultSegmentSize = u64(1) << 22;

u64 isqrt(u64 n);

// All primes <= limit, ascending.
struct PrimeTable {
  u64 limit = 0;
  std::vector<u64> primes;

  u64 count() const { return primes.size(); }
};

PrimeTable primes_up_to(u64 n, const SieveLimits& limits = {});

// pi(x) = number of primes <= x. Requires x <= table.limit.
u64 pi(u64 x, const PrimeTable& table);

// Largest prime factor of every integer in [lo, hi), with the convention
// lpf(1) = 1.
struct LpfSegment {
  u64 lo = 0;
  u64 hi = 0;
  std::vector<u64> lpf;  // lpf[n - lo] = P+(n)

  u64 at(u64 n) const;
};

// Requires 1 <= lo < hi <= 2^63 and base.limit >= isqrt(hi - 1).
LpfSegment lpf_segment(u64 lo, u64 hi, const PrimeTable& base, const SieveLimits& limits = {});

// Primality flags for [lo, hi): flags[n - lo] = 1 iff n is prime.
// Requires base.limit >= isqrt(hi - 1).
std::vector<u8> prime_flags(u64 lo, u64 hi, const PrimeTable& base);

// Odd-only packed primality bitmap covering [0, limit]. Random access
// companion to the streaming routines above.
class PrimalityMap {
 public:
  explicit PrimalityMap(u64 limit, const SieveLimits& limits = {});

  u64 limit() const { return limit_; }

  bool is_prime(u64 n) const {
    if (n > limit_) throw std::out_of_range("PrimalityMap: query above limit");
    if (n < 2 || n % 2 == 0) return n == 2;
    const u64 i = (n - 1) / 2;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }

 private:
  u64 limit_;
  std::vector<u64> bits_;
};

// Calls fn(p) for every prime p in [lo, hi), ascending, in fixed-size
// segments; memory stays O(segment + sqrt(hi)).
template <typename Fn>
void for_each_prime(u64 lo, u64 hi, Fn&& fn) {
  if (hi <= 2 || lo >= hi) return;
  lo = std::max<u64>(lo, 2);
  const PrimeTable base = primes_up_to(std::max<u64>(isqrt(hi - 1), 2));
  for (u64 seg_lo = lo; seg_lo < hi;) {
    const u64 seg_hi = std::min(hi, seg_lo + kDefaultSegmentSize);
    const std::vector<u8> flags = prime_flags(seg_lo, seg_hi, base);
    for (u64 i = 0; i < flags.size(); ++i)
      if (flags[i]) fn(seg_lo + i);
    seg_lo = seg_hi;
  }
}

}  // namespace splf
