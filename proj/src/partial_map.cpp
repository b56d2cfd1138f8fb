#include "transemi/partial_map.hpp"

#include "transemi/error.hpp"

namespace transemi {

PartialMap::PartialMap(std::size_t base_size) : entries_(base_size, kUndefined) {}

PartialMap::PartialMap(std::size_t base_size, std::vector<Point> entries) : entries_(std::move(entries)) {
  if (entries_.size() != base_size) throw InputError("entry count differs from base size");
  for (std::size_t a = 0; a < entries_.size(); ++a)
    if (entries_[a] != kUndefined && entries_[a] >= base_size)
      throw InputError("image of point " + std::to_string(a) + " out of range: " + std::to_string(entries_[a]));
}

PartialMap PartialMap::from_pairs(std::size_t base_size, std::span<const std::pair<Point, Point>> pairs) {
  PartialMap f(base_size);
  for (const auto& [a, b] : pairs) {
    if (a >= base_size || b >= base_size)
      throw InputError("pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for base size " +
                       std::to_string(base_size));
    if (f.entries_[a] != kUndefined && f.entries_[a] != b)
      throw InputError("not functional at element " + std::to_string(a) + ": maps to both " +
                       std::to_string(f.entries_[a]) + " and " + std::to_string(b));
    f.entries_[a] = b;
  }
  return f;
}

PartialMap PartialMap::identity(std::size_t base_size) {
  PartialMap f(base_size);
  for (std::size_t a = 0; a < base_size; ++a) f.entries_[a] = static_cast<Point>(a);
  return f;
}

bool PartialMap::empty() const {
  for (Point p : entries_)
    if (p != kUndefined) return false;
  return true;
}

std::size_t PartialMap::pair_count() const {
  std::size_t n = 0;
  for (Point p : entries_) n += p != kUndefined;
  return n;
}

std::vector<std::pair<PartialMap::Point, PartialMap::Point>> PartialMap::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t a = 0; a < entries_.size(); ++a)
    if (entries_[a] != kUndefined) out.emplace_back(static_cast<Point>(a), entries_[a]);
  return out;
}

bool PartialMap::is_subset_of(const PartialMap& other) const {
  if (base_size() != other.base_size()) throw CarrierMismatch();
  for (std::size_t a = 0; a < entries_.size(); ++a)
    if (entries_[a] != kUndefined && entries_[a] != other.entries_[a]) return false;
  return true;
}

std::string PartialMap::to_string() const {
  std::string s = "{";
  bool sep = false;
  for (const auto& [a, b] : pairs()) {
    if (sep) s += ',';
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    sep = true;
  }
  return s + "}";
}

PartialMap compose(const PartialMap& g, const PartialMap& f) {
  if (g.base_size() != f.base_size()) throw CarrierMismatch();
  std::vector<PartialMap::Point> out(f.base_size(), PartialMap::kUndefined);
  for (std::size_t a = 0; a < out.size(); ++a) {
    PartialMap::Point b = f(static_cast<PartialMap::Point>(a));
    if (b != PartialMap::kUndefined) out[a] = g(b);
  }
  return PartialMap(f.base_size(), std::move(out));
}

PartialMap intersect(const PartialMap& f, const PartialMap& g) {
  if (f.base_size() != g.base_size()) throw CarrierMismatch();
  std::vector<PartialMap::Point> out(f.base_size(), PartialMap::kUndefined);
  for (std::size_t a = 0; a < out.size(); ++a) {
    auto p = static_cast<PartialMap::Point>(a);
    if (f(p) == g(p)) out[a] = f(p);
  }
  return PartialMap(f.base_size(), std::move(out));
}

PartialMap identity_on(const SubsetA& x) {
  std::vector<PartialMap::Point> out(x.size(), PartialMap::kUndefined);
  for (std::size_t a : x.members()) out[a] = static_cast<PartialMap::Point>(a);
  return PartialMap(x.size(), std::move(out));
}

SubsetA domain(const PartialMap& f) {
  SubsetA d(f.base_size());
  for (std::size_t a = 0; a < f.base_size(); ++a)
    if (f.defined(static_cast<PartialMap::Point>(a))) d.set(a);
  return d;
}

SubsetA image(const PartialMap& f) {
  SubsetA im(f.base_size());
  for (PartialMap::Point b : f.entries())
    if (b != PartialMap::kUndefined) im.set(b);
  return im;
}

std::size_t PartialMapHash::operator()(const PartialMap& f) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (PartialMap::Point p : f.entries()) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace transemi
