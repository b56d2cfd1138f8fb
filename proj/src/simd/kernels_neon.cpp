#include "transemi/bitkernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <bit>

namespace transemi::kernels {
namespace neon_impl {
namespace {

constexpr std::size_t kLanes = 2;

void or_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes)
    vst1q_u64(dst.data() + i, vorrq_u64(vld1q_u64(dst.data() + i), vld1q_u64(src.data() + i)));
  for (; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes)
    vst1q_u64(dst.data() + i, vandq_u64(vld1q_u64(dst.data() + i), vld1q_u64(src.data() + i)));
  for (; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes)
    vst1q_u64(dst.data() + i, vbicq_u64(vld1q_u64(dst.data() + i), vld1q_u64(src.data() + i)));
  for (; i < dst.size(); ++i) dst[i] &= ~src[i];
}

inline bool any(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes)
    if (any(vbicq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)))) return false;
  for (; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes)
    if (any(vandq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)))) return true;
  for (; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool equal(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes)
    if (any(veorq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)))) return false;
  for (; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t popcount(std::span<const Word> a) {
  std::size_t n = 0, i = 0;
  for (; i + kLanes <= a.size(); i += kLanes) {
    uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a.data() + i)));
    n += vaddvq_u8(bytes);
  }
  for (; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i]));
  return n;
}

}  // namespace

const Table& table() {
  static const Table t{"neon",    or_into,    and_into, andnot_into,
                       is_subset, intersects, equal,    popcount};
  return t;
}

}  // namespace neon_impl
}  // namespace transemi::kernels

#endif
