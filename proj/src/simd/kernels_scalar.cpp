#include "transemi/bitkernels.hpp"

#include <bit>

namespace transemi::kernels {
namespace {

void or_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool equal(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t popcount(std::span<const Word> a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

}  // namespace

const Table& scalar() {
  static const Table table{"scalar", or_into,    and_into, andnot_into,
                           is_subset, intersects, equal,    popcount};
  return table;
}

}  // namespace transemi::kernels
