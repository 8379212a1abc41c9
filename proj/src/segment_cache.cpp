#include "splf/segment_cache.hpp"

#include <cstring>
#include <fstream>

namespace splf {

namespace {

constexpr char kMagic[4] = {'S', 'P', 'L', 'F'};
constexpr u8 kVersion = 0x01;

void put_u64le(std::string& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

u64 get_u64le(const char* p) {
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<u64>(static_cast<u8>(p[i])) << (8 * i);
  return v;
}

}  // namespace

std::string segment_cache_filename(u64 lo, u64 hi) {
  return "lpf_" + std::to_string(lo) + "_" + std::to_string(hi) + ".splf";
}

bool write_segment_cache(const std::filesystem::path& file, const LpfSegment& seg) {
  std::string buf;
  buf.reserve(4 + 1 + 16 + 8 * seg.lpf.size());
  buf.append(kMagic, 4);
  buf.push_back(static_cast<char>(kVersion));
  put_u64le(buf, seg.lo);
  put_u64le(buf, seg.hi);
  for (u64 v : seg.lpf) put_u64le(buf, v);

  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  return static_cast<bool>(out);
}

std::optional<LpfSegment> read_segment_cache(const std::filesystem::path& file, u64 expected_lo,
                                             u64 expected_hi) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof()) return std::nullopt;

  const u64 len = expected_hi > expected_lo ? expected_hi - expected_lo : 0;
  const size_t want = 4 + 1 + 16 + 8 * static_cast<size_t>(len);
  if (len == 0 || buf.size() != want) return std::nullopt;
  if (std::memcmp(buf.data(), kMagic, 4) != 0) return std::nullopt;
  if (static_cast<u8>(buf[4]) != kVersion) return std::nullopt;
  if (get_u64le(buf.data() + 5) != expected_lo) return std::nullopt;
  if (get_u64le(buf.data() + 13) != expected_hi) return std::nullopt;

  LpfSegment seg;
  seg.lo = expected_lo;
  seg.hi = expected_hi;
  seg.lpf.resize(len);
  const char* p = buf.data() + 21;
  for (u64 i = 0; i < len; ++i, p += 8) seg.lpf[i] = get_u64le(p);
  return seg;
}

}  // namespace splf
