#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace transemi::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

// Word-span kernels shared by every bitset in the library. All spans passed to
// a binary kernel have equal length; callers guarantee it.
struct Table {
  std::string_view name;
  void (*or_into)(std::span<Word> dst, std::span<const Word> src);
  void (*and_into)(std::span<Word> dst, std::span<const Word> src);
  void (*andnot_into)(std::span<Word> dst, std::span<const Word> src);
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
  bool (*intersects)(std::span<const Word> a, std::span<const Word> b);
  bool (*equal)(std::span<const Word> a, std::span<const Word> b);
  std::size_t (*popcount)(std::span<const Word> a);
};

const Table& scalar();

// nullptr when the variant was not compiled in or the running CPU lacks it.
const Table* avx2();
const Table* neon();

// Chosen once: best supported variant, unless TRANSEMI_SIMD=scalar is set.
const Table& active();

}  // namespace transemi::kernels
