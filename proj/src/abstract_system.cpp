#include "transemi/abstract_system.hpp"

#include "transemi/error.hpp"

namespace transemi {

AbstractSystem::AbstractSystem(std::size_t size, std::vector<Elem> mul, std::vector<Elem> meet, BitMatrix xi,
                               BitMatrix delta)
    : size_(size), mul_(std::move(mul)), meet_(std::move(meet)), xi_(std::move(xi)), delta_(std::move(delta)) {
  if (size_ == 0) throw InputError("malformed system: empty carrier");
  if (mul_.size() != size_ * size_) throw InputError("malformed system: mul table has wrong shape");
  if (meet_.size() != size_ * size_) throw InputError("malformed system: meet table has wrong shape");
  if (xi_.size() != size_ || delta_.size() != size_) throw InputError("malformed system: relation has wrong shape");
  for (std::size_t i = 0; i < mul_.size(); ++i) {
    if (mul_[i] >= size_)
      throw InputError("malformed system: mul[" + std::to_string(i / size_) + "][" + std::to_string(i % size_) +
                       "] out of range");
    if (meet_[i] >= size_)
      throw InputError("malformed system: meet[" + std::to_string(i / size_) + "][" + std::to_string(i % size_) +
                       "] out of range");
  }
}

BitMatrix natural_order(const AbstractSystem& sys) {
  const auto m = static_cast<Elem>(sys.size());
  BitMatrix z(m);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (sys.leq(x, y)) z.set(x, y);
  return z;
}

std::string elem_name(const AbstractSystem& sys, Elem x) {
  return x == sys.size() ? std::string("e") : std::to_string(x);
}

namespace {

Witness bind(const AbstractSystem& sys, std::initializer_list<std::pair<const char*, Elem>> vars,
             std::string note = {}) {
  Witness w;
  for (const auto& [name, v] : vars) w.bindings.emplace_back(name, elem_name(sys, v));
  w.note = std::move(note);
  return w;
}

}  // namespace

Report validate(const AbstractSystem& sys) {
  const auto m = static_cast<Elem>(sys.size());
  Report r;
  r.title = "hypotheses";

  auto& assoc = r.add("mul-associative");
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z)
        if (sys.mul(sys.mul(x, y), z) != sys.mul(x, sys.mul(y, z))) assoc.fail(bind(sys, {{"x", x}, {"y", y}, {"z", z}}));

  auto& semi = r.add("meet-semilattice");
  for (Elem x = 0; x < m; ++x) {
    if (sys.meet(x, x) != x) semi.fail(bind(sys, {{"x", x}}, "not idempotent"));
    for (Elem y = 0; y < m; ++y) {
      if (sys.meet(x, y) != sys.meet(y, x)) semi.fail(bind(sys, {{"x", x}, {"y", y}}, "not commutative"));
      for (Elem z = 0; z < m; ++z)
        if (sys.meet(sys.meet(x, y), z) != sys.meet(x, sys.meet(y, z)))
          semi.fail(bind(sys, {{"x", x}, {"y", y}, {"z", z}}, "not associative"));
    }
  }

  const BitMatrix order = natural_order(sys);

  auto& order_in_xi = r.add("order-in-xi");
  for (Elem x = 0; x < m; ++x)
    for (Elem y : order.row(x).members())
      if (!sys.xi(x, static_cast<Elem>(y))) order_in_xi.fail(bind(sys, {{"x", x}, {"y", static_cast<Elem>(y)}}));

  auto& left_regular = r.add("xi-left-regular");
  for (const auto& [u, v] : sys.xi_matrix().pairs())
    for (Elem x = 0; x < m; ++x)
      if (!sys.xi(sys.mul(x, static_cast<Elem>(u)), sys.mul(x, static_cast<Elem>(v))))
        left_regular.fail(bind(sys, {{"u", static_cast<Elem>(u)}, {"v", static_cast<Elem>(v)}, {"x", x}}));

  auto& left_ideal = r.add("delta-left-ideal");
  for (const auto& [x, y] : sys.delta_matrix().pairs())
    for (Elem u = 0; u < m; ++u)
      if (!sys.delta(sys.mul(u, static_cast<Elem>(x)), static_cast<Elem>(y)))
        left_ideal.fail(bind(sys, {{"x", static_cast<Elem>(x)}, {"y", static_cast<Elem>(y)}, {"u", u}}));

  // x(y meet z) = xy meet xz
  auto& left_dist = r.add("meet-left-distributive");
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z)
        if (sys.mul(x, sys.meet(y, z)) != sys.meet(sys.mul(x, y), sys.mul(x, z)))
          left_dist.fail(bind(sys, {{"x", x}, {"y", y}, {"z", z}}));

  // x <= y, u <= v, y xi v  ==>  u xi x
  auto& downward = r.add("xi-order-compatible");
  const BitMatrix below = order.transpose();  // below.row(y) = {x | x <= y}
  for (const auto& [y, v] : sys.xi_matrix().pairs())
    for (std::size_t u : below.row(v).members()) {
      if (below.row(y).is_subset_of(sys.xi_matrix().row(u))) continue;
      for (std::size_t x : below.row(y).members())
        if (!sys.xi(static_cast<Elem>(u), static_cast<Elem>(x)))
          downward.fail(bind(sys, {{"x", static_cast<Elem>(x)},
                                   {"y", static_cast<Elem>(y)},
                                   {"u", static_cast<Elem>(u)},
                                   {"v", static_cast<Elem>(v)}}));
    }

  // x xi y  ==>  (x meet y)u = xu meet yu
  auto& right_dist = r.add("xi-right-distributive");
  for (const auto& [x, y] : sys.xi_matrix().pairs()) {
    const auto a = static_cast<Elem>(x), b = static_cast<Elem>(y);
    for (Elem u = 0; u < m; ++u)
      if (sys.mul(sys.meet(a, b), u) != sys.meet(sys.mul(a, u), sys.mul(b, u)))
        right_dist.fail(bind(sys, {{"x", a}, {"y", b}, {"u", u}}));
  }
  return r;
}

Report derived_props(const AbstractSystem& sys) {
  const auto m = static_cast<Elem>(sys.size());
  Report r;
  r.title = "derived properties";

  auto& refl = r.add("xi-reflexive");
  for (Elem x = 0; x < m; ++x)
    if (!sys.xi(x, x)) refl.fail(bind(sys, {{"x", x}}));

  auto& symm = r.add("xi-symmetric");
  for (const auto& [x, y] : sys.xi_matrix().pairs())
    if (!sys.xi(static_cast<Elem>(y), static_cast<Elem>(x)))
      symm.fail(bind(sys, {{"x", static_cast<Elem>(x)}, {"y", static_cast<Elem>(y)}}));

  const BitMatrix order = natural_order(sys);
  auto& left = r.add("order-left-regular");
  auto& right = r.add("order-right-regular");
  for (const auto& [x, y] : order.pairs())
    for (Elem z = 0; z < m; ++z) {
      const auto a = static_cast<Elem>(x), b = static_cast<Elem>(y);
      if (!sys.leq(sys.mul(z, a), sys.mul(z, b))) left.fail(bind(sys, {{"x", a}, {"y", b}, {"z", z}}));
      if (!sys.leq(sys.mul(a, z), sys.mul(b, z))) right.fail(bind(sys, {{"x", a}, {"y", b}, {"z", z}}));
    }
  return r;
}

}  // namespace transemi
