#include "transemi/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

#include "transemi/error.hpp"

namespace transemi {

namespace {

void require_nonempty(const Bitset& h) {
  if (h.none()) throw Error("closure of empty set undefined");
}

}  // namespace

Witness describe(const AbstractSystem& sys, const StepTuple& tuple) {
  Witness w;
  w.bindings = {{"u", elem_name(sys, tuple.u)},
                {"v", elem_name(sys, tuple.v)},
                {"x", elem_name(sys, tuple.x)},
                {"y", elem_name(sys, tuple.y)},
                {"t", elem_name(sys, tuple.t)}};
  return w;
}

std::optional<StepTuple> admitting_tuple(const AbstractSystem& sys, Elem z, const Bitset& h) {
  const StarView s(sys);
  const auto m = static_cast<Elem>(sys.size());
  const auto star = static_cast<Elem>(s.size());
  for (Elem u : h.members()) {
    for (Elem v = 0; v < m; ++v) {
      if (!sys.xi(u, v)) continue;
      const Elem uv = sys.meet(u, v);
      for (Elem x = 0; x < star; ++x) {
        if (!h.test(s.mul(v, x))) continue;
        const Elem a = s.mul(uv, x);
        for (Elem y = 0; y < star; ++y) {
          if (!s.delta(a, y)) continue;
          const Elem b = s.mul(a, y);
          for (Elem t = 0; t < star; ++t)
            if (s.leq(b, s.mul(z, t))) return StepTuple{u, v, x, y, t};
        }
      }
    }
  }
  return std::nullopt;
}

ClosureEngine::ClosureEngine(const AbstractSystem& sys) : sys_(&sys) {
  const StarView s(sys);
  const std::size_t m = sys.size();
  const std::size_t star = s.size();
  star_mul_.resize(star * star);
  for (std::size_t a = 0; a < star; ++a)
    for (std::size_t b = 0; b < star; ++b)
      star_mul_[a * star + b] = s.mul(static_cast<Elem>(a), static_cast<Elem>(b));

  extend_.assign(m, Bitset(m));
  dominated_.assign(m, Bitset(m));
  for (Elem a = 0; a < m; ++a)
    for (Elem y = 0; y < star; ++y)
      if (s.delta(a, y)) extend_[a].set(s.mul(a, y));
  for (Elem z = 0; z < m; ++z)
    for (Elem t = 0; t < star; ++t) {
      const Elem zt = s.mul(z, t);
      for (Elem b = 0; b < m; ++b)
        if (sys.leq(b, zt)) dominated_[b].set(z);
    }
}

Bitset ClosureEngine::step(const Bitset& h) const {
  require_nonempty(h);
  const AbstractSystem& sys = *sys_;
  const std::size_t m = sys.size();
  const std::size_t star = m + 1;

  // right_[v] = {x in G* | vx in h}
  std::vector<std::vector<Elem>> right(m);
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t x = 0; x < star; ++x)
      if (h.test(star_mul_[v * star + x])) right[v].push_back(static_cast<Elem>(x));

  // Products (u meet v)x over admissible u, v, x.
  Bitset heads(m);
  for (Elem u : h.members())
    for (std::size_t v : sys.xi_matrix().row(u).members()) {
      const Elem uv = sys.meet(u, static_cast<Elem>(v));
      for (Elem x : right[v]) heads.set(star_mul_[uv * star + x]);
    }

  Bitset tails(m);
  for (std::size_t a : heads.members()) tails |= extend_[a];

  Bitset out(m);
  for (std::size_t b : tails.members()) out |= dominated_[b];
  return out;
}

Bitset f_step(const AbstractSystem& sys, const Bitset& h) { return ClosureEngine(sys).step(h); }

ClosureResult f_closure(const ClosureEngine& engine, const Bitset& h, bool with_witnesses) {
  require_nonempty(h);
  ClosureResult r;
  r.chain.push_back(h);
  Bitset cur = h;
  while (true) {
    Bitset next = engine.step(cur) | cur;
    ++r.rounds;
    const bool stable = next == cur;
    if (!stable && with_witnesses) {
      Bitset added = next;
      added.subtract(cur);
      for (std::size_t z : added.members()) {
        auto tuple = admitting_tuple(engine.system(), static_cast<Elem>(z), cur);
        r.witnesses.push_back(ClosureWitness{static_cast<Elem>(z), r.rounds, tuple.value_or(StepTuple{})});
      }
    }
    r.chain.push_back(next);
    if (stable) break;
    cur = std::move(next);
  }
  r.closed_set = std::move(cur);
  return r;
}

ClosureResult f_closure(const AbstractSystem& sys, const Bitset& h) {
  const ClosureEngine engine(sys);
  return f_closure(engine, h, true);
}

namespace {

bool closed_by_implication(const AbstractSystem& sys, const Bitset& h) {
  const StarView s(sys);
  const auto m = static_cast<Elem>(sys.size());
  const auto star = static_cast<Elem>(s.size());
  for (Elem u : h.members())
    for (Elem v = 0; v < m; ++v) {
      if (!sys.xi(u, v)) continue;
      for (Elem x = 0; x < star; ++x) {
        if (!h.test(s.mul(v, x))) continue;
        const Elem a = s.mul(sys.meet(u, v), x);
        for (Elem y = 0; y < star; ++y) {
          if (!s.delta(a, y)) continue;
          const Elem b = s.mul(a, y);
          for (Elem z = 0; z < m; ++z) {
            if (h.test(z)) continue;
            for (Elem t = 0; t < star; ++t)
              if (s.leq(b, s.mul(z, t))) return false;
          }
        }
      }
    }
  return true;
}

bool closed_by_conditions(const AbstractSystem& sys, const Bitset& h) {
  const StarView s(sys);
  const auto m = static_cast<Elem>(sys.size());
  const auto star = static_cast<Elem>(s.size());
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      // xy in H -> x in H
      if (h.test(sys.mul(x, y)) && !h.test(x)) return false;
      if (!h.test(x)) continue;
      // x |- y, x in H -> xy in H
      if (sys.delta(x, y) && !h.test(sys.mul(x, y))) return false;
      // x <= y, x in H -> y in H
      if (sys.leq(x, y) && !h.test(y)) return false;
    }
  // g1 xi g2, g1 in H, g2 x in H -> (g1 meet g2)x in H; x may be e.
  for (Elem g1 : h.members())
    for (Elem g2 = 0; g2 < m; ++g2) {
      if (!sys.xi(g1, g2)) continue;
      for (Elem x = 0; x < star; ++x)
        if (h.test(s.mul(g2, x)) && !h.test(s.mul(sys.meet(g1, g2), x))) return false;
    }
  return true;
}

}  // namespace

bool is_closed(const AbstractSystem& sys, const Bitset& h, ClosedMethod method) {
  return method == ClosedMethod::implication ? closed_by_implication(sys, h) : closed_by_conditions(sys, h);
}

std::size_t oracle_budget() {
  if (const char* env = std::getenv("TRANSEMI_ORACLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, 63);
  }
  return kDefaultOracleBudget;
}

Bitset least_closed_oracle(const AbstractSystem& sys, const Bitset& h) {
  require_nonempty(h);
  const std::size_t m = sys.size();
  if (m > oracle_budget())
    throw Error("oracle budget exceeded: |G| = " + std::to_string(m) + " > " + std::to_string(oracle_budget()));
  std::uint64_t base = 0;
  for (std::size_t i : h.members()) base |= std::uint64_t{1} << i;
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  const std::uint64_t free = all & ~base;

  std::uint64_t least = all;
  // Every submask of the free bits, including zero.
  std::uint64_t sub = free;
  while (true) {
    const std::uint64_t cand = base | sub;
    // Supersets of the current candidate cannot shrink it.
    if ((least & cand) != least && is_closed(sys, Bitset::from_mask(m, cand), ClosedMethod::implication))
      least &= cand;
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return Bitset::from_mask(m, least);
}

namespace {

// Direct evaluation of the nested witness formula. memo[level][target] caches
// the first satisfying tuple of the subformula rooted at that level.
class TreeSearch {
 public:
  TreeSearch(const AbstractSystem& sys, const Bitset& h, std::size_t depth)
      : sys_(sys), star_(sys), h_(h), depth_(depth), memo_(depth + 1, std::vector<Slot>(sys.size())) {}

  std::optional<StepTuple> node(std::size_t level, Elem target) {
    Slot& slot = memo_[level][target];
    if (!slot.done) {
      slot.tuple = search(level, target);
      slot.done = true;
    }
    return slot.tuple;
  }

  XnResult run(Elem z) {
    XnResult r;
    r.direct = true;
    r.tree.assign(std::size_t{1} << depth_, std::nullopt);
    r.member = node(1, z).has_value();
    if (r.member) fill(r.tree, 1, 1, z);
    return r;
  }

 private:
  struct Slot {
    bool done = false;
    std::optional<StepTuple> tuple;
  };

  std::optional<StepTuple> search(std::size_t level, Elem target) {
    const auto m = static_cast<Elem>(sys_.size());
    const auto star = static_cast<Elem>(star_.size());
    const bool leaf = level == depth_;
    for (Elem u = 0; u < m; ++u) {
      if (leaf && !h_.test(u)) continue;
      for (Elem v = 0; v < m; ++v) {
        if (!sys_.xi(u, v)) continue;
        for (Elem x = 0; x < star; ++x) {
          const Elem vx = star_.mul(v, x);
          if (leaf && !h_.test(vx)) continue;
          const Elem a = star_.mul(sys_.meet(u, v), x);
          for (Elem y = 0; y < star; ++y) {
            if (!star_.delta(a, y)) continue;
            const Elem b = star_.mul(a, y);
            for (Elem t = 0; t < star; ++t) {
              if (!star_.leq(b, star_.mul(target, t))) continue;
              if (leaf || (node(level + 1, u) && node(level + 1, vx))) return StepTuple{u, v, x, y, t};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  void fill(std::vector<std::optional<StepTuple>>& tree, std::size_t index, std::size_t level, Elem target) {
    tree[index] = memo_[level][target].tuple;
    if (level == depth_) return;
    const StepTuple& t = *tree[index];
    fill(tree, 2 * index, level + 1, t.u);
    fill(tree, 2 * index + 1, level + 1, star_.mul(t.v, t.x));
  }

  const AbstractSystem& sys_;
  StarView star_;
  const Bitset& h_;
  std::size_t depth_;
  std::vector<std::vector<Slot>> memo_;
};

XnResult xn_member_stepwise(const AbstractSystem& sys, Elem z, const Bitset& h, std::size_t n) {
  const ClosureEngine engine(sys);
  std::vector<Bitset> iterates{h};
  for (std::size_t k = 1; k <= n; ++k) {
    if (iterates.back().none()) {
      iterates.push_back(iterates.back());
      continue;
    }
    iterates.push_back(engine.step(iterates.back()));
  }
  XnResult r;
  r.member = iterates[n].test(z);
  r.tree.assign(std::size_t{1} << n, std::nullopt);
  if (!r.member) return r;
  const StarView s(sys);
  std::function<void(std::size_t, std::size_t, Elem)> fill = [&](std::size_t index, std::size_t level, Elem target) {
    auto tuple = admitting_tuple(sys, target, iterates[n - level]);
    r.tree[index] = tuple;
    if (level == n || !tuple) return;
    fill(2 * index, level + 1, tuple->u);
    fill(2 * index + 1, level + 1, s.mul(tuple->v, tuple->x));
  };
  fill(1, 1, z);
  return r;
}

}  // namespace

XnResult xn_member_direct(const AbstractSystem& sys, Elem z, const Bitset& h, std::size_t n) {
  require_nonempty(h);
  if (n == 0) throw Error("witness depth must be positive");
  return TreeSearch(sys, h, n).run(z);
}

XnResult xn_member(const AbstractSystem& sys, Elem z, const Bitset& h, std::size_t n) {
  require_nonempty(h);
  if (n == 0) throw Error("witness depth must be positive");
  if (n <= kXnDirectMaxDepth && sys.size() <= kXnDirectMaxSize) return TreeSearch(sys, h, n).run(z);
  return xn_member_stepwise(sys, z, h, n);
}

PairClosures::PairClosures(const AbstractSystem& sys, bool parallel) : engine_(sys) {
  const std::size_t m = sys.size();
  const std::size_t slots = m * (m + 1) / 2;
  sets_.resize(slots);
  rounds_.resize(slots);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x; y < m; ++y) {
        const std::size_t k = slot(static_cast<Elem>(x), static_cast<Elem>(y));
        if (k % stride != begin) continue;
        Bitset h(m);
        h.set(x);
        h.set(y);
        ClosureResult r = f_closure(engine_, h, false);
        sets_[k] = std::move(r.closed_set);
        rounds_[k] = r.rounds;
      }
  };
  const std::size_t threads = parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1;
  if (threads <= 1) {
    work(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(work, i, threads);
  for (auto& t : pool) t.join();
}

std::size_t PairClosures::slot(Elem x, Elem y) const {
  if (x > y) std::swap(x, y);
  const std::size_t m = system().size();
  // Row-major upper triangle including the diagonal.
  return x * m - x * (x - 1) / 2 + (y - x);
}

const Bitset& PairClosures::of(Elem x, Elem y) const { return sets_[slot(x, y)]; }
std::size_t PairClosures::rounds(Elem x, Elem y) const { return rounds_[slot(x, y)]; }

namespace {

std::string trace(const AbstractSystem& sys, const Bitset& h, Elem target) {
  const ClosureResult r = f_closure(sys, h);
  std::string s = "closure " + r.closed_set.to_string();
  for (const auto& w : r.witnesses) {
    if (w.z != target) continue;
    s += "; " + elem_name(sys, w.z) + " added in round " + std::to_string(w.round) + " via " +
         describe(sys, w.tuple).to_string();
  }
  return s;
}

}  // namespace

Report check_axiom_schemes(const PairClosures& closures) {
  const AbstractSystem& sys = closures.system();
  const auto m = static_cast<Elem>(sys.size());
  Report r;
  r.title = "axiom schemes";
  auto& order = r.add("scheme-order");
  auto& compat = r.add("scheme-compatibility");
  auto& adjacency = r.add("scheme-adjacency");
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      const Elem xy_meet = sys.meet(x, y);
      const Elem xy = sys.mul(x, y);
      // x meet y in f({x}) -> x <= y
      if (closures.of(x).test(xy_meet) && !sys.leq(x, y))
        order.fail(Witness{{{"x", elem_name(sys, x)}, {"y", elem_name(sys, y)}},
                           trace(sys, Bitset::singleton(m, x), xy_meet)});
      // x meet y in f({x,y}) -> x xi y
      if (closures.of(x, y).test(xy_meet) && !sys.xi(x, y)) {
        Bitset h = Bitset::singleton(m, x);
        h.set(y);
        compat.fail(Witness{{{"x", elem_name(sys, x)}, {"y", elem_name(sys, y)}}, trace(sys, h, xy_meet)});
      }
      // xy in f({x}) -> x |- y
      if (closures.of(x).test(xy) && !sys.delta(x, y))
        adjacency.fail(
            Witness{{{"x", elem_name(sys, x)}, {"y", elem_name(sys, y)}}, trace(sys, Bitset::singleton(m, x), xy)});
    }
  return r;
}

Report check_axiom_schemes(const AbstractSystem& sys) { return check_axiom_schemes(PairClosures(sys)); }

}  // namespace transemi
