#include "transemi/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "transemi/error.hpp"

namespace transemi {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

PartialMap random_map(std::mt19937_64& rng, std::size_t n) {
  std::vector<PartialMap::Point> entries(n);
  for (auto& p : entries) {
    const std::size_t v = draw(rng, n + 1);
    p = v == n ? PartialMap::kUndefined : static_cast<PartialMap::Point>(v);
  }
  return PartialMap(n, std::move(entries));
}

}  // namespace

TransformationsInstance random_maps(std::uint64_t seed, std::size_t points, std::size_t maps) {
  if (points == 0 || maps == 0) throw InputError("points and maps must be positive");
  std::mt19937_64 rng(seed);
  TransformationsInstance t;
  t.base_size = points;
  for (std::size_t i = 0; i < maps; ++i) t.maps.push_back(random_map(rng, points));
  return t;
}

GeneratedSystem generate_system(std::uint64_t seed, std::size_t max_points, std::size_t max_maps, std::size_t cap) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t n = 1 + draw(rng, max_points);
    const std::size_t k = 1 + draw(rng, max_maps);
    TransformationsInstance t;
    t.base_size = n;
    for (std::size_t i = 0; i < k; ++i) t.maps.push_back(random_map(rng, n));
    try {
      TransSystem sys = TransSystem::generate(t.maps, cap);
      return GeneratedSystem{seed, std::move(t), std::move(sys)};
    } catch (const Error&) {
      // closure too large; redraw
    }
  }
  throw Error("no instance within cap after 1000 draws");
}

std::vector<GeneratedSystem> generate_corpus(std::uint64_t first_seed, std::size_t count, std::size_t max_points,
                                             std::size_t max_maps, std::size_t cap) {
  std::vector<GeneratedSystem> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate_system(first_seed + i, max_points, max_maps, cap));
  return out;
}

namespace {

std::vector<std::vector<Elem>> all_tables(std::size_t m) {
  const std::size_t cells = m * m;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= m;
  std::vector<std::vector<Elem>> out;
  out.reserve(total);
  std::vector<Elem> t(cells, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      t[i] = static_cast<Elem>(c % m);
      c /= m;
    }
    out.push_back(t);
  }
  return out;
}

bool associative(const std::vector<Elem>& t, std::size_t m) {
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (t[t[x * m + y] * m + z] != t[x * m + t[y * m + z]]) return false;
  return true;
}

bool semilattice(const std::vector<Elem>& t, std::size_t m) {
  for (std::size_t x = 0; x < m; ++x) {
    if (t[x * m + x] != x) return false;
    for (std::size_t y = 0; y < m; ++y)
      if (t[x * m + y] != t[y * m + x]) return false;
  }
  return associative(t, m);
}

bool left_distributive(const std::vector<Elem>& mul, const std::vector<Elem>& meet, std::size_t m) {
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (mul[x * m + meet[y * m + z]] != meet[mul[x * m + y] * m + mul[x * m + z]]) return false;
  return true;
}

BitMatrix relation_from_mask(std::size_t m, std::uint64_t mask) {
  BitMatrix r(m);
  for (std::size_t i = 0; i < m * m; ++i)
    if ((mask >> i) & 1U) r.set(i / m, i % m);
  return r;
}

bool passes(const Report& r, std::initializer_list<const char*> ids) {
  for (const char* id : ids)
    if (!r.find(id)->pass) return false;
  return true;
}

}  // namespace

std::vector<AbstractSystem> enumerate_distributive_tables(std::size_t m) {
  if (m == 0 || m > 3) throw Error("table enumeration supports 1 <= m <= 3");
  const auto tables = all_tables(m);
  std::vector<const std::vector<Elem>*> muls, meets;
  for (const auto& t : tables) {
    if (associative(t, m)) muls.push_back(&t);
    if (semilattice(t, m)) meets.push_back(&t);
  }
  std::vector<AbstractSystem> out;
  for (const auto* mul : muls)
    for (const auto* meet : meets)
      if (left_distributive(*mul, *meet, m)) out.emplace_back(m, *mul, *meet, BitMatrix(m), BitMatrix(m));
  return out;
}

std::vector<AbstractSystem> enumerate_systems(std::size_t m, bool valid_only) {
  if (m == 0 || m > 3) throw Error("system enumeration supports 1 <= m <= 3");
  const std::uint64_t relations = std::uint64_t{1} << (m * m);
  std::vector<AbstractSystem> out;
  if (m <= 2 && !valid_only) {
    const auto tables = all_tables(m);
    for (const auto& mul : tables)
      for (const auto& meet : tables)
        for (std::uint64_t xi = 0; xi < relations; ++xi)
          for (std::uint64_t delta = 0; delta < relations; ++delta)
            out.emplace_back(m, mul, meet, relation_from_mask(m, xi), relation_from_mask(m, delta));
    return out;
  }
  // xi-conditions and delta-conditions are independent given the tables, so
  // each relation is filtered on its own before pairing.
  for (const auto& base : enumerate_distributive_tables(m)) {
    std::vector<BitMatrix> xis, deltas;
    for (std::uint64_t mask = 0; mask < relations; ++mask) {
      const BitMatrix r = relation_from_mask(m, mask);
      const Report as_xi = validate(AbstractSystem(m, base.mul_table(), base.meet_table(), r, BitMatrix(m)));
      if (passes(as_xi, {"mul-associative", "meet-semilattice", "meet-left-distributive", "order-in-xi",
                         "xi-left-regular", "xi-order-compatible", "xi-right-distributive"}))
        xis.push_back(r);
      const Report as_delta = validate(AbstractSystem(m, base.mul_table(), base.meet_table(), BitMatrix(m), r));
      if (passes(as_delta, {"delta-left-ideal"})) deltas.push_back(r);
    }
    for (const auto& xi : xis)
      for (const auto& delta : deltas) {
        AbstractSystem sys(m, base.mul_table(), base.meet_table(), xi, delta);
        if (validate(sys).ok()) out.push_back(std::move(sys));
      }
  }
  return out;
}

namespace {

AbstractSystem relabel(const AbstractSystem& sys, const std::vector<Elem>& perm) {
  const std::size_t m = sys.size();
  std::vector<Elem> mul(m * m), meet(m * m);
  BitMatrix xi(m), delta(m);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      mul[perm[x] * m + perm[y]] = perm[sys.mul(x, y)];
      meet[perm[x] * m + perm[y]] = perm[sys.meet(x, y)];
      xi.set(perm[x], perm[y], sys.xi(x, y));
      delta.set(perm[x], perm[y], sys.delta(x, y));
    }
  return AbstractSystem(m, std::move(mul), std::move(meet), std::move(xi), std::move(delta));
}

std::vector<std::uint64_t> encode(const AbstractSystem& sys) {
  std::vector<std::uint64_t> code(sys.mul_table().begin(), sys.mul_table().end());
  code.insert(code.end(), sys.meet_table().begin(), sys.meet_table().end());
  for (const auto& [x, y] : sys.xi_matrix().pairs()) code.push_back(1000 + x * sys.size() + y);
  code.push_back(999);
  for (const auto& [x, y] : sys.delta_matrix().pairs()) code.push_back(1000 + x * sys.size() + y);
  return code;
}

}  // namespace

std::vector<AbstractSystem> up_to_isomorphism(const std::vector<AbstractSystem>& systems) {
  std::set<std::pair<std::size_t, std::vector<std::uint64_t>>> seen;
  std::vector<AbstractSystem> out;
  for (const auto& sys : systems) {
    std::vector<Elem> perm(sys.size());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::vector<std::uint64_t> best;
    do {
      auto code = encode(relabel(sys, perm));
      if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.emplace(sys.size(), std::move(best)).second) out.push_back(sys);
  }
  return out;
}

}  // namespace transemi
