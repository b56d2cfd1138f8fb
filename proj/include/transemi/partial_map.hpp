#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "transemi/bitset.hpp"

namespace transemi {

// A subset of the carrier {0..n-1}.
using SubsetA = Bitset;

// Partial transformation of {0..n-1}, viewed as a functional subset of A x A.
// Equality is structural.
class PartialMap {
 public:
  using Point = std::uint32_t;
  static constexpr Point kUndefined = UINT32_MAX;

  PartialMap() = default;
  // Nowhere-defined map on n points.
  explicit PartialMap(std::size_t base_size);
  // entries[a] is the image of a or kUndefined. Throws InputError on out-of-range values.
  PartialMap(std::size_t base_size, std::vector<Point> entries);

  // Rejects duplicate first components with distinct images, naming the point.
  static PartialMap from_pairs(std::size_t base_size, std::span<const std::pair<Point, Point>> pairs);
  static PartialMap identity(std::size_t base_size);

  std::size_t base_size() const { return entries_.size(); }
  bool defined(Point a) const { return entries_[a] != kUndefined; }
  Point operator()(Point a) const { return entries_[a]; }
  std::span<const Point> entries() const { return entries_; }

  bool empty() const;
  std::size_t pair_count() const;
  std::vector<std::pair<Point, Point>> pairs() const;

  // Inclusion as sets of pairs.
  bool is_subset_of(const PartialMap& other) const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;
  friend auto operator<=>(const PartialMap&, const PartialMap&) = default;

  // "{(0,1),(1,2)}"
  std::string to_string() const;

 private:
  std::vector<Point> entries_;
};

// (g o f)(a) = g(f(a)); defined iff f(a) and g(f(a)) are.
PartialMap compose(const PartialMap& g, const PartialMap& f);
// Pointwise agreement.
PartialMap intersect(const PartialMap& f, const PartialMap& g);
// Identity relation on X.
PartialMap identity_on(const SubsetA& x);
SubsetA domain(const PartialMap& f);
SubsetA image(const PartialMap& f);

struct PartialMapHash {
  std::size_t operator()(const PartialMap& f) const noexcept;
};

}  // namespace transemi
