#include "splf/shifted_stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "splf/segment_cache.hpp"

namespace splf {

bool holds_threshold(u64 q, u64 p, Exponent c) {
  if (p < 2) throw std::domain_error("holds_threshold: p must be >= 2");
  if (q == 0) throw std::domain_error("holds_threshold: q must be >= 1");
  return compare_pow(q, c.den, p, c.num) >= 0;
}

namespace {

LpfSegment load_or_compute_segment(u64 lo, u64 hi, const PrimeTable& base,
                                   const ScanOptions& opts) {
  if (!opts.cache_dir) return lpf_segment(lo, hi, base, opts.limits);
  const std::filesystem::path file = *opts.cache_dir / segment_cache_filename(lo, hi);
  if (auto cached = read_segment_cache(file, lo, hi)) return std::move(*cached);
  LpfSegment seg = lpf_segment(lo, hi, base, opts.limits);
  write_segment_cache(file, seg);  // best effort; a failed write only costs a recompute
  return seg;
}

}  // namespace

DensityScan scan_tc(u64 x, std::vector<Exponent> grid, const ScanOptions& opts) {
  if (x < 100) throw std::domain_error("scan_tc: x must be >= 100");
  if (x > opts.x_cap)
    throw budget_error("scan_tc: x = " + std::to_string(x) + " exceeds cap " +
                       std::to_string(opts.x_cap) +
                       " (ScanOptions.x_cap; raise it explicitly for large runs)");
  if (grid.empty()) throw std::invalid_argument("scan_tc: exponent grid must be nonempty");
  if (opts.segment_size == 0) throw std::invalid_argument("scan_tc: segment_size must be > 0");
  if (opts.segment_size > opts.limits.segment_cap)
    throw budget_error("scan_tc: segment_size " + std::to_string(opts.segment_size) +
                       " exceeds cap " + std::to_string(opts.limits.segment_cap) +
                       " (SieveLimits.segment_cap; shrink the segment or raise the cap)");

  std::sort(grid.begin(), grid.end());
  const size_t n_c = grid.size();

  const PrimeTable base = primes_up_to(std::max<u64>(isqrt(x), 2), opts.limits);

  // Exact integer thresholds for the x^c condition, ascending with c.
  std::vector<u64> q_min(n_c);
  for (size_t g = 0; g < n_c; ++g) q_min[g] = min_q_at_least_pow(x, grid[g]);

  // Segments cover n in [1, x); the prime tested is p = n + 1 <= x.
  const u64 seg_count = (x - 1 + opts.segment_size - 1) / opts.segment_size;
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, seg_count));

  struct Partial {
    std::vector<u64> t, tp;
    u64 pi = 0;
  };
  std::vector<Partial> partials(threads, Partial{std::vector<u64>(n_c, 0),
                                                 std::vector<u64>(n_c, 0), 0});
  std::atomic<u64> next_seg{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&](Partial& acc) {
    try {
      for (;;) {
        const u64 k = next_seg.fetch_add(1, std::memory_order_relaxed);
        if (k >= seg_count || failed.load(std::memory_order_relaxed)) break;
        const u64 lo = 1 + k * opts.segment_size;
        const u64 hi = std::min<u64>(x, lo + opts.segment_size);
        const LpfSegment seg = load_or_compute_segment(lo, hi, base, opts);
        const std::vector<u8> flags = prime_flags(lo + 1, hi + 1, base);
        for (u64 i = 0; i < hi - lo; ++i) {
          if (!flags[i]) continue;
          const u64 p = lo + i + 1;
          const u64 q = seg.lpf[i];
          ++acc.pi;
          // p^c grows with c, so the satisfied exponents form a prefix.
          for (size_t g = 0; g < n_c; ++g) {
            if (compare_pow(q, grid[g].den, p, grid[g].num) < 0) break;
            ++acc.t[g];
          }
          for (size_t g = 0; g < n_c; ++g) {
            if (q < q_min[g]) break;
            ++acc.tp[g];
          }
        }
      }
    } catch (...) {
      std::scoped_lock lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  };

  if (threads <= 1) {
    worker(partials[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, std::ref(partials[t]));
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  DensityScan scan;
  scan.x = x;
  scan.rows.resize(n_c);
  u64 pi_x = 0;
  for (const Partial& part : partials) pi_x += part.pi;

  const double log_x = std::log(static_cast<double>(x));
  const double log_log_x = std::log(log_x);
  for (size_t g = 0; g < n_c; ++g) {
    DensityRow& row = scan.rows[g];
    row.c = grid[g];
    for (const Partial& part : partials) {
      row.t_c += part.t[g];
      row.t_prime_c += part.tp[g];
    }
    row.pi_x = pi_x;
    row.ratio_t = static_cast<double>(row.t_c) / static_cast<double>(pi_x);
    row.ratio_t_prime = static_cast<double>(row.t_prime_c) / static_cast<double>(pi_x);
    row.lemma2_gap_normalized = static_cast<double>(row.t_c - row.t_prime_c) * log_x * log_x /
                                (static_cast<double>(x) * log_log_x);
  }
  return scan;
}

u64 tprime_via_pairs(u64 x, Exponent c, const SieveLimits& limits) {
  if (2 * c.num < c.den)
    throw std::invalid_argument(
        "tprime_via_pairs: requires c >= 1/2; below that p-1 can carry several prime factors "
        "above x^c and the pair sum overcounts");
  if (x < 100) throw std::domain_error("tprime_via_pairs: x must be >= 100");
  if (x > limits.bitmap_cap)
    throw budget_error("tprime_via_pairs: x = " + std::to_string(x) + " exceeds cap " +
                       std::to_string(limits.bitmap_cap) + " (SieveLimits.bitmap_cap)");

  const PrimalityMap primes(x, limits);

  // Deliberately not min_q_at_least_pow: the oracle derives the exact
  // threshold by bisection on the comparison itself.
  u64 lo = 1, hi = x;  // x^den >= x^num always holds, so hi is feasible
  while (lo < hi) {
    const u64 mid = lo + (hi - lo) / 2;
    if (compare_pow(mid, c.den, x, c.num) >= 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  const u64 q0 = lo;  // q0 >= x^(1/2) >= 10 here, so even q never occur

  u64 count = 0;
  for (u64 q = q0 | 1; q < x; q += 2) {
    if (!primes.is_prime(q)) continue;
    for (u64 m = q + 1; m <= x; m += q)
      if (primes.is_prime(m)) ++count;
  }
  return count;
}

u64 prime_pair_count(u64 h, u64 y, const SieveLimits& limits) {
  if (h < 2 || h % 2 != 0)
    throw std::invalid_argument("prime_pair_count: h must be even and >= 2 (qh+1 is even otherwise)");
  if (y < 2) throw std::domain_error("prime_pair_count: y must be >= 2");
  if (y <= 3) return 0;  // no prime q with 2 < q < y

  const u128 top = static_cast<u128>(h) * (y - 1) + 1;
  if (top > limits.bitmap_cap)
    throw budget_error("prime_pair_count: needs primality up to h*(y-1)+1 = " +
                       std::to_string(static_cast<u64>(top)) + ", exceeding cap " +
                       std::to_string(limits.bitmap_cap) + " (SieveLimits.bitmap_cap)");

  const PrimalityMap primes(static_cast<u64>(top), limits);
  u64 count = 0;
  for (u64 q = 3; q < y; q += 2)
    if (primes.is_prime(q) && primes.is_prime(q * h + 1)) ++count;
  return count;
}

}  // namespace splf
