#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "splf/sieve.hpp"

namespace splf {

// On-disk cache of one LpfSegment. Layout, all integers little-endian:
//   "SPLF" | version byte 0x01 | lo u64 | hi u64 | (hi-lo) x u64 lpf values
//
// The cache is purely an optimization: a missing, stale or corrupt file is
// reported as "absent" and the caller recomputes. Results never depend on
// whether the cache was used.

std::string segment_cache_filename(u64 lo, u64 hi);

bool write_segment_cache(const std::filesystem::path& file, const LpfSegment& seg);

std::optional<LpfSegment> read_segment_cache(const std::filesystem::path& file, u64 expected_lo,
                                             u64 expected_hi);

}  // namespace splf
