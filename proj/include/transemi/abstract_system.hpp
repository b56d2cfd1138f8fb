#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "transemi/bitset.hpp"
#include "transemi/report.hpp"

namespace transemi {

using Elem = std::uint32_t;

// Finite system (G, ., meet, xi, delta) on G = {0..m-1}.
class AbstractSystem {
 public:
  AbstractSystem() = default;
  // Throws InputError("malformed system: ...") on wrong shapes or out-of-range entries.
  AbstractSystem(std::size_t size, std::vector<Elem> mul, std::vector<Elem> meet, BitMatrix xi, BitMatrix delta);

  std::size_t size() const { return size_; }
  Elem mul(Elem x, Elem y) const { return mul_[x * size_ + y]; }
  Elem meet(Elem x, Elem y) const { return meet_[x * size_ + y]; }
  bool xi(Elem x, Elem y) const { return xi_(x, y); }
  bool delta(Elem x, Elem y) const { return delta_(x, y); }
  // Natural order of the meet: x <= y iff x meet y == x.
  bool leq(Elem x, Elem y) const { return meet(x, y) == x; }

  const std::vector<Elem>& mul_table() const { return mul_; }
  const std::vector<Elem>& meet_table() const { return meet_; }
  const BitMatrix& xi_matrix() const { return xi_; }
  const BitMatrix& delta_matrix() const { return delta_; }

  friend bool operator==(const AbstractSystem&, const AbstractSystem&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> meet_;
  BitMatrix xi_;
  BitMatrix delta_;
};

// The zeta matrix: (x,y) set iff meet[x][y] == x.
BitMatrix natural_order(const AbstractSystem& sys);

// G* = G plus an adjoined identity e = size(). Relations involving e hold only
// for e <= e, e |- e and x |- e; meet is never applied to e.
class StarView {
 public:
  explicit StarView(const AbstractSystem& sys) : sys_(&sys) {}

  const AbstractSystem& base() const { return *sys_; }
  std::size_t size() const { return sys_->size() + 1; }
  Elem e() const { return static_cast<Elem>(sys_->size()); }
  bool is_e(Elem x) const { return x == e(); }

  Elem mul(Elem x, Elem y) const {
    if (x == e()) return y;
    if (y == e()) return x;
    return sys_->mul(x, y);
  }
  bool leq(Elem x, Elem y) const {
    if (x == e() || y == e()) return x == y;
    return sys_->leq(x, y);
  }
  bool xi(Elem x, Elem y) const { return x != e() && y != e() && sys_->xi(x, y); }
  bool delta(Elem x, Elem y) const {
    if (y == e()) return true;
    return x != e() && sys_->delta(x, y);
  }

 private:
  const AbstractSystem* sys_;
};

// "3" or "e" for the adjoined identity.
std::string elem_name(const AbstractSystem& sys, Elem x);

// Hypothesis checks; one check per condition, every failing condition reported.
Report validate(const AbstractSystem& sys);

// Consequences of the hypotheses: xi reflexive and symmetric, order stable.
Report derived_props(const AbstractSystem& sys);

}  // namespace transemi
