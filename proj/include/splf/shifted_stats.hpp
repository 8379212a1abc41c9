#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "splf/exponent.hpp"
#include "splf/sieve.hpp"

namespace splf {

// One exponent's counts at a fixed x:
//   t_c       = #{ p <= x prime : P+(p-1) >= p^c }
//   t_prime_c = #{ p <= x prime : P+(p-1) >= x^c }
struct DensityRow {
  Exponent c;
  u64 t_c = 0;
  u64 t_prime_c = 0;
  u64 pi_x = 0;
  double ratio_t = 0.0;
  double ratio_t_prime = 0.0;
  // (t_c - t_prime_c) * (ln x)^2 / (x * ln ln x); the two statistics differ
  // by O(x ln ln x / (ln x)^2), so this stays bounded as x grows.
  double lemma2_gap_normalized = 0.0;
};

struct DensityScan {
  u64 x = 0;
  std::vector<DensityRow> rows;  // sorted by c ascending
};

struct ScanOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  u64 segment_size = kDefaultSegmentSize;
  std::optional<std::filesystem::path> cache_dir;  // LPF segment cache, optional
  u64 x_cap = u64(1) << 40;
  SieveLimits limits;
};

// Exact test of q >= p^c (ties count as satisfying). Requires p >= 2.
bool holds_threshold(u64 q, u64 p, Exponent c);

// One streaming pass over P+ values of [1, x), counting every grid exponent
// at once. Segments are independent work units; counts are reduced by
// addition, so the result does not depend on thread count or schedule.
// Requires x >= 100 and a nonempty grid.
DensityScan scan_tc(u64 x, std::vector<Exponent> grid, const ScanOptions& opts = {});

// Independent route to t_prime_c for c >= 1/2: sum over primes q in [x^c, x)
// of #{ h >= 1 : qh+1 <= x prime }. Each counted p has exactly one prime
// factor >= x^c >= sqrt(x), so the pair sum equals the direct count exactly.
u64 tprime_via_pairs(u64 x, Exponent c, const SieveLimits& limits = {});

// #{ q prime : 2 < q < y, qh+1 prime }. Requires h even (odd h makes qh+1
// even); y below 3 gives an empty range.
u64 prime_pair_count(u64 h, u64 y, const SieveLimits& limits = {});

}  // namespace splf
