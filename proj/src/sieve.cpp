#include "splf/sieve.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace splf {

u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

PrimeTable primes_up_to(u64 n, const SieveLimits& limits) {
  if (n < 2) throw std::domain_error("primes_up_to: n must be >= 2");
  if (n > limits.prime_table_cap)
    throw budget_error("primes_up_to: limit " + std::to_string(n) + " exceeds cap " +
                       std::to_string(limits.prime_table_cap) + " (SieveLimits.prime_table_cap)");

  // Odd-only packed sieve: bit i stands for the odd number 2i+1.
  const u64 half = (n - 1) / 2 + 1;
  std::vector<u64> bits((half + 63) / 64, ~u64(0));
  bits[0] &= ~u64(1);  // 1 is not prime
  for (u64 i = 1;; ++i) {
    const u64 p = 2 * i + 1;
    if (static_cast<u128>(p) * p > n) break;
    if (!((bits[i >> 6] >> (i & 63)) & 1)) continue;
    for (u64 j = (p * p - 1) / 2; j < half; j += p) bits[j >> 6] &= ~(u64(1) << (j & 63));
  }

  PrimeTable table;
  table.limit = n;
  table.primes.push_back(2);
  for (u64 i = 1; i < half; ++i)
    if ((bits[i >> 6] >> (i & 63)) & 1) table.primes.push_back(2 * i + 1);
  return table;
}

u64 pi(u64 x, const PrimeTable& table) {
  if (x > table.limit)
    throw std::out_of_range("pi: x = " + std::to_string(x) + " exceeds table limit " +
                            std::to_string(table.limit));
  auto it = std::upper_bound(table.primes.begin(), table.primes.end(), x);
  return static_cast<u64>(it - table.primes.begin());
}

u64 LpfSegment::at(u64 n) const {
  if (n < lo || n >= hi) throw std::out_of_range("LpfSegment: n outside [lo, hi)");
  return lpf[n - lo];
}

LpfSegment lpf_segment(u64 lo, u64 hi, const PrimeTable& base, const SieveLimits& limits) {
  if (lo == 0)
    throw std::invalid_argument("lpf_segment: lo = 0 rejected; P+ is defined on positive integers");
  if (lo >= hi) throw std::invalid_argument("lpf_segment: empty interval [lo, hi)");
  if (hi > (u64(1) << 63)) throw std::invalid_argument("lpf_segment: hi must be <= 2^63");
  if (hi - lo > limits.segment_cap)
    throw budget_error("lpf_segment: length " + std::to_string(hi - lo) + " exceeds cap " +
                       std::to_string(limits.segment_cap) + " (SieveLimits.segment_cap)");
  const u64 top = hi - 1;
  if (base.limit < isqrt(top))
    throw std::invalid_argument("lpf_segment: base table covers " + std::to_string(base.limit) +
                                " but needs " + std::to_string(isqrt(top)));

  const u64 len = hi - lo;
  LpfSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  seg.lpf.assign(len, 1);

  // residual[n - lo] starts at n; each base prime p <= sqrt(top) is fully
  // divided out of its multiples and recorded as the current maximum.
  // Whatever survives above 1 is a prime factor larger than sqrt(top),
  // hence the largest one.
  std::vector<u64> residual(len);
  std::iota(residual.begin(), residual.end(), lo);

  for (u64 p : base.primes) {
    if (static_cast<u128>(p) * p > top) break;
    for (u64 m = ((lo + p - 1) / p) * p; m < hi; m += p) {
      u64& r = residual[m - lo];
      do {
        r /= p;
      } while (r % p == 0);
      seg.lpf[m - lo] = p;
    }
  }
  for (u64 i = 0; i < len; ++i)
    if (residual[i] > 1) seg.lpf[i] = residual[i];
  return seg;
}

std::vector<u8> prime_flags(u64 lo, u64 hi, const PrimeTable& base) {
  if (lo >= hi) throw std::invalid_argument("prime_flags: empty interval");
  const u64 top = hi - 1;
  if (base.limit < isqrt(top))
    throw std::invalid_argument("prime_flags: base table covers " + std::to_string(base.limit) +
                                " but needs " + std::to_string(isqrt(top)));

  std::vector<u8> flags(hi - lo, 1);
  for (u64 n = lo; n < std::min<u64>(hi, 2); ++n) flags[n - lo] = 0;
  for (u64 p : base.primes) {
    const u128 p2 = static_cast<u128>(p) * p;
    if (p2 > top) break;
    u64 start = ((lo + p - 1) / p) * p;
    if (start < p2) start = static_cast<u64>(p2);  // never strike p itself
    for (u64 m = start; m < hi; m += p) flags[m - lo] = 0;
  }
  return flags;
}

PrimalityMap::PrimalityMap(u64 limit, const SieveLimits& limits) : limit_(limit) {
  if (limit < 2) throw std::domain_error("PrimalityMap: limit must be >= 2");
  if (limit > limits.bitmap_cap)
    throw budget_error("PrimalityMap: limit " + std::to_string(limit) + " exceeds cap " +
                       std::to_string(limits.bitmap_cap) + " (SieveLimits.bitmap_cap)");
  const u64 half = (limit - 1) / 2 + 1;  // odd numbers 1, 3, ..., <= limit
  bits_.assign((half + 63) / 64, ~u64(0));
  bits_[0] &= ~u64(1);
  for (u64 i = 1;; ++i) {
    const u64 p = 2 * i + 1;
    if (static_cast<u128>(p) * p > limit) break;
    if (!((bits_[i >> 6] >> (i & 63)) & 1)) continue;
    for (u64 j = (p * p - 1) / 2; j < half; j += p) bits_[j >> 6] &= ~(u64(1) << (j & 63));
  }
}

}  // namespace splf
