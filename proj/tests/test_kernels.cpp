#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "transemi/bitkernels.hpp"
#include "transemi/bitset.hpp"

using namespace transemi;
using kernels::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> w(n);
  for (auto& x : w) {
    x = rng();
    // sparse and dense variants so subset/intersect both go either way
    if (density < 0) x &= rng() & rng();
    if (density > 0) x |= rng() | rng();
  }
  return w;
}

void compare(const kernels::Table& ref, const kernels::Table& other) {
  std::mt19937_64 rng(42);
  for (std::size_t len : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 67}) {
    for (int round = 0; round < 40; ++round) {
      auto a = random_words(rng, len, round % 3 - 1);
      auto b = random_words(rng, len, (round / 3) % 3 - 1);
      if (round % 5 == 0) b = a;
      if (round % 7 == 0 && len > 0) {
        for (std::size_t i = 0; i < len; ++i) a[i] &= b[i];
      }
      CHECK(ref.is_subset(a, b) == other.is_subset(a, b));
      CHECK(ref.intersects(a, b) == other.intersects(a, b));
      CHECK(ref.equal(a, b) == other.equal(a, b));
      CHECK(ref.popcount(a) == other.popcount(a));
      for (auto op : {&kernels::Table::or_into, &kernels::Table::and_into, &kernels::Table::andnot_into}) {
        auto x = a, y = a;
        (ref.*op)(x, b);
        (other.*op)(y, b);
        CHECK(x == y);
      }
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels on hand values") {
  const auto& k = kernels::scalar();
  std::vector<Word> a{0b1010, 0}, b{0b1110, 1};
  CHECK(k.is_subset(a, b));
  CHECK_FALSE(k.is_subset(b, a));
  CHECK(k.intersects(a, b));
  CHECK(k.popcount(b) == 4);
  k.andnot_into(b, a);
  CHECK(b == std::vector<Word>{0b0100, 1});
  std::vector<Word> empty;
  CHECK(k.is_subset(empty, empty));
  CHECK_FALSE(k.intersects(empty, empty));
}

TEST_CASE("avx2 kernels match scalar") {
  const auto* t = kernels::avx2();
  if (!t) {
    MESSAGE("avx2 variant unavailable on this machine");
    return;
  }
  compare(kernels::scalar(), *t);
}

TEST_CASE("neon kernels match scalar") {
  const auto* t = kernels::neon();
  if (!t) {
    MESSAGE("neon variant unavailable on this machine");
    return;
  }
  compare(kernels::scalar(), *t);
}

TEST_CASE("active table is one of the known variants") {
  const auto& act = kernels::active();
  bool known = &act == &kernels::scalar() || &act == kernels::avx2() || &act == kernels::neon();
  CHECK(known);
}

TEST_CASE("bitset basics across word boundaries") {
  Bitset s(130);
  s.set(0);
  s.set(64);
  s.set(129);
  CHECK(s.count() == 3);
  CHECK(s.members() == std::vector<std::size_t>{0, 64, 129});
  CHECK(s.first() == 0);
  CHECK(s.next(0) == 64);
  CHECK(s.next(129) == 130);
  CHECK(s.to_string() == "{0,64,129}");
  Bitset f = Bitset::full(130);
  CHECK(f.count() == 130);
  CHECK(s.is_subset_of(f));
  f.subtract(s);
  CHECK(f.count() == 127);
  CHECK_FALSE(f.intersects(s));
  CHECK((f | s) == Bitset::full(130));
  CHECK((f & s).none());
  CHECK(Bitset(5).first() == 5);
  CHECK(Bitset::from_mask(4, 0b1001) == Bitset::of(4, {0, 3}));
}

TEST_CASE("bitset set algebra matches std::set semantics") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 1 + rng() % 150;
    Bitset a(n), b(n);
    std::vector<bool> va(n), vb(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 3 == 0) { a.set(i); va[i] = true; }
      if (rng() % 3 == 0) { b.set(i); vb[i] = true; }
    }
    bool subset = true, inter = false;
    std::size_t both = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (va[i] && !vb[i]) subset = false;
      if (va[i] && vb[i]) { inter = true; ++both; }
    }
    CHECK(a.is_subset_of(b) == subset);
    CHECK(a.intersects(b) == inter);
    CHECK((a & b).count() == both);
    CHECK((a | b).count() == a.count() + b.count() - both);
  }
}

TEST_CASE("bit matrix transpose and pairs") {
  BitMatrix m(3);
  m.set(0, 1);
  m.set(2, 0);
  CHECK(m.count() == 2);
  auto t = m.transpose();
  CHECK(t(1, 0));
  CHECK(t(0, 2));
  CHECK(t.transpose() == m);
  CHECK(m.pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 0}});
  BitMatrix full(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) full.set(i, j);
  CHECK(m.is_subset_of(full));
  CHECK_FALSE(full.is_subset_of(m));
}
