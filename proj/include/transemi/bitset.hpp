#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "transemi/bitkernels.hpp"

namespace transemi {

// Dense fixed-universe bitset over {0..size-1}. Bits past size are kept zero.
class Bitset {
 public:
  using Word = kernels::Word;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static Bitset full(std::size_t size);
  static Bitset singleton(std::size_t size, std::size_t i);
  static Bitset of(std::size_t size, std::initializer_list<std::size_t> members);
  // Bit i set iff bit i of mask set; only valid for size <= 64.
  static Bitset from_mask(std::size_t size, std::uint64_t mask);

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= Word{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(Word{1} << (i % 64)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const { return kernels::active().popcount(words_); }
  bool none() const;
  bool any() const { return !none(); }

  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  Bitset& subtract(const Bitset& o);
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool is_subset_of(const Bitset& o) const;
  bool intersects(const Bitset& o) const;
  friend bool operator==(const Bitset& a, const Bitset& b);

  // Ascending member indices.
  std::vector<std::size_t> members() const;
  // Index of lowest member, or size() when empty.
  std::size_t first() const;
  std::size_t next(std::size_t after) const;

  // "{0,2,5}"
  std::string to_string() const;

  static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Square boolean matrix stored as rows of bitsets.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : rows_(n, Bitset(n)) {}

  std::size_t size() const { return rows_.size(); }
  bool operator()(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].assign(j, v); }
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  Bitset& row(std::size_t i) { return rows_[i]; }

  BitMatrix transpose() const;
  bool is_subset_of(const BitMatrix& o) const;
  BitMatrix& operator&=(const BitMatrix& o);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) { return a.rows_ == b.rows_; }

  std::size_t count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

 private:
  std::vector<Bitset> rows_;
};

}  // namespace transemi
