#include "transemi/bitset.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace transemi {

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  for (std::size_t w = 0; w < b.words_.size(); ++w) b.words_[w] = ~Word{0};
  if (size % 64 != 0) b.words_.back() = (Word{1} << (size % 64)) - 1;
  return b;
}

Bitset Bitset::singleton(std::size_t size, std::size_t i) {
  Bitset b(size);
  b.set(i);
  return b;
}

Bitset Bitset::of(std::size_t size, std::initializer_list<std::size_t> members) {
  Bitset b(size);
  for (std::size_t i : members) {
    if (i >= size) throw std::out_of_range("bitset member out of range");
    b.set(i);
  }
  return b;
}

Bitset Bitset::from_mask(std::size_t size, std::uint64_t mask) {
  assert(size <= 64);
  Bitset b(size);
  if (size > 0) b.words_[0] = size == 64 ? mask : mask & ((Word{1} << size) - 1);
  return b;
}

bool Bitset::none() const {
  for (Word w : words_)
    if (w) return false;
  return true;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  assert(size_ == o.size_);
  kernels::active().or_into(words_, o.words_);
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  assert(size_ == o.size_);
  kernels::active().and_into(words_, o.words_);
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  assert(size_ == o.size_);
  kernels::active().andnot_into(words_, o.words_);
  return *this;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  assert(size_ == o.size_);
  return kernels::active().is_subset(words_, o.words_);
}

bool Bitset::intersects(const Bitset& o) const {
  assert(size_ == o.size_);
  return kernels::active().intersects(words_, o.words_);
}

bool operator==(const Bitset& a, const Bitset& b) {
  return a.size_ == b.size_ && kernels::active().equal(a.words_, b.words_);
}

std::vector<std::size_t> Bitset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

std::size_t Bitset::next(std::size_t after) const {
  std::size_t i = after + 1;
  if (i >= size_) return size_;
  std::size_t w = i / 64;
  Word bits = words_[w] & (~Word{0} << (i % 64));
  while (true) {
    if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return size_;
    bits = words_[w];
  }
}

std::string Bitset::to_string() const {
  std::string s = "{";
  bool sep = false;
  for (std::size_t i : members()) {
    if (sep) s += ',';
    s += std::to_string(i);
    sep = true;
  }
  return s + "}";
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j : rows_[i].members()) t.set(j, i);
  return t;
}

bool BitMatrix::is_subset_of(const BitMatrix& o) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (!rows_[i].is_subset_of(o.rows_[i])) return false;
  return true;
}

BitMatrix& BitMatrix::operator&=(const BitMatrix& o) {
  for (std::size_t i = 0; i < size(); ++i) rows_[i] &= o.rows_[i];
  return *this;
}

std::size_t BitMatrix::count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> BitMatrix::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j : rows_[i].members()) out.emplace_back(i, j);
  return out;
}

}  // namespace transemi
