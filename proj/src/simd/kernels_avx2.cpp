// Built with -mavx2; only reached after a runtime CPU check.
#include "transemi/bitkernels.hpp"

#if defined(TRANSEMI_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace transemi::kernels {
namespace avx2_impl {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void or_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes)
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
  for (; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes)
    store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
  for (; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  // _mm256_andnot_si256(a, b) computes ~a & b.
  for (; i + kLanes <= dst.size(); i += kLanes)
    store(dst.data() + i, _mm256_andnot_si256(load(src.data() + i), load(dst.data() + i)));
  for (; i < dst.size(); ++i) dst[i] &= ~src[i];
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes) {
    __m256i stray = _mm256_andnot_si256(load(b.data() + i), load(a.data() + i));
    if (!_mm256_testz_si256(stray, stray)) return false;
  }
  for (; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes)
    if (!_mm256_testz_si256(load(a.data() + i), load(b.data() + i))) return true;
  for (; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool equal(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes) {
    __m256i diff = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t popcount(std::span<const Word> a) {
  // No AVX2 vector popcount; four independent scalar chains keep the ports busy.
  std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0, i = 0;
  for (; i + kLanes <= a.size(); i += kLanes) {
    c0 += static_cast<std::size_t>(std::popcount(a[i]));
    c1 += static_cast<std::size_t>(std::popcount(a[i + 1]));
    c2 += static_cast<std::size_t>(std::popcount(a[i + 2]));
    c3 += static_cast<std::size_t>(std::popcount(a[i + 3]));
  }
  for (; i < a.size(); ++i) c0 += static_cast<std::size_t>(std::popcount(a[i]));
  return c0 + c1 + c2 + c3;
}

}  // namespace

const Table& table() {
  static const Table t{"avx2",    or_into,    and_into, andnot_into,
                       is_subset, intersects, equal,    popcount};
  return t;
}

}  // namespace avx2_impl
}  // namespace transemi::kernels

#endif
