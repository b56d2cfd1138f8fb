#include "transemi/representation.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "transemi/closure.hpp"
#include "transemi/error.hpp"

namespace transemi {

std::vector<Elem> DeterminingPair::classes() const {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < class_of.size(); ++x)
    if (class_of[x] == x) out.push_back(static_cast<Elem>(x));
  return out;
}

Bitset DeterminingPair::members(Elem class_id) const {
  Bitset b(class_of.size());
  for (std::size_t x = 0; x < class_of.size(); ++x)
    if (class_of[x] == class_id) b.set(x);
  return b;
}

std::vector<Elem> canonical_classes(const std::vector<Elem>& class_of) {
  std::vector<Elem> out(class_of.size());
  std::vector<std::pair<Elem, Elem>> first;  // raw id -> least member
  for (std::size_t x = 0; x < class_of.size(); ++x) {
    auto it = std::find_if(first.begin(), first.end(), [&](const auto& p) { return p.first == class_of[x]; });
    if (it == first.end()) {
      first.emplace_back(class_of[x], static_cast<Elem>(x));
      out[x] = static_cast<Elem>(x);
    } else {
      out[x] = it->second;
    }
  }
  return out;
}

DeterminingPair eps_pair(const PairClosures& closures, Elem g1, Elem g2) {
  const AbstractSystem& sys = closures.system();
  const auto m = static_cast<Elem>(sys.size());
  const Bitset& closed = closures.of(g1, g2);
  auto related = [&](Elem x, Elem y) {
    return closed.test(sys.meet(x, y)) || (!closed.test(x) && !closed.test(y));
  };

  DeterminingPair dp;
  dp.class_of.resize(m + 1);
  for (Elem x = 0; x < m; ++x) {
    Elem rep = x;
    for (Elem y = 0; y < x; ++y)
      if (related(x, y)) {
        rep = y;
        break;
      }
    dp.class_of[x] = rep;
  }
  dp.class_of[m] = m;

  auto witness = [&](const char* note, Elem x, Elem y) {
    return Witness{{{"g1", elem_name(sys, g1)}, {"g2", elem_name(sys, g2)}, {"x", elem_name(sys, x)},
                    {"y", elem_name(sys, y)}},
                   note};
  };
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (related(x, y) != dp.same(x, y))
        throw HypothesisError("hypotheses violated: relation is not an equivalence", witness("not transitive", x, y));

  for (Elem x = 0; x < m; ++x)
    if (!closed.test(x)) {
      dp.w_class = dp.class_of[x];
      break;
    }

  const Report check = validate_determining_pair(sys, dp);
  for (const auto& c : check.checks)
    if (!c.pass) {
      Witness w = c.witnesses.front();
      w.bindings.insert(w.bindings.begin(), {{"g1", elem_name(sys, g1)}, {"g2", elem_name(sys, g2)}});
      throw HypothesisError("hypotheses violated: " + c.id, w);
    }
  return dp;
}

DeterminingPair eps_pair(const AbstractSystem& sys, Elem g1, Elem g2) { return eps_pair(PairClosures(sys), g1, g2); }

Report validate_determining_pair(const AbstractSystem& sys, const DeterminingPair& dp) {
  const StarView s(sys);
  const auto m = static_cast<Elem>(sys.size());
  const auto star = static_cast<Elem>(s.size());
  Report r;
  r.title = "determining pair";
  auto& shape = r.add("partition-well-formed");
  if (dp.class_of.size() != star) {
    shape.fail(Witness{{}, "class_of has " + std::to_string(dp.class_of.size()) + " entries"});
    return r;
  }
  for (Elem x = 0; x < star; ++x)
    if (dp.class_of[x] >= star || dp.class_of[dp.class_of[x]] != dp.class_of[x])
      shape.fail(Witness{{{"x", elem_name(sys, x)}}, "class id is not a member of its class"});
  if (!shape.pass) return r;

  auto& regular = r.add("eps-right-regular");
  for (Elem x = 0; x < star; ++x)
    for (Elem y = x + 1; y < star; ++y) {
      if (!dp.same(x, y)) continue;
      for (Elem z = 0; z < star; ++z)
        if (!dp.same(s.mul(x, z), s.mul(y, z)))
          regular.fail(Witness{{{"x", elem_name(sys, x)}, {"y", elem_name(sys, y)}, {"z", elem_name(sys, z)}}, {}});
    }

  auto& w_in_g = r.add("w-class-in-g");
  auto& w_ideal = r.add("w-right-ideal");
  if (dp.w_class) {
    if (*dp.w_class >= star || dp.class_of[*dp.w_class] != *dp.w_class) {
      w_in_g.fail(Witness{{{"w", std::to_string(*dp.w_class)}}, "not a class id"});
      return r;
    }
    if (dp.in_w(m)) w_in_g.fail(Witness{{{"x", "e"}}, "identity lies in W"});
    for (Elem w = 0; w < m; ++w) {
      if (!dp.in_w(w)) continue;
      for (Elem u = 0; u < m; ++u)
        if (!dp.in_w(sys.mul(w, u))) w_ideal.fail(Witness{{{"w", elem_name(sys, w)}, {"u", elem_name(sys, u)}}, {}});
    }
  }
  return r;
}

std::vector<DeterminingPair> enumerate_determining_pairs(const AbstractSystem& sys) {
  const StarView s(sys);
  const std::size_t star = s.size();
  if (star > 8) throw Error("determining pair enumeration limited to |G| <= 7");
  std::vector<DeterminingPair> out;
  std::vector<Elem> growth(star, 0);
  // Restricted growth strings enumerate set partitions.
  std::function<void(std::size_t, Elem)> rec = [&](std::size_t i, Elem max_used) {
    if (i == star) {
      DeterminingPair dp;
      dp.class_of = canonical_classes(growth);
      Report check = validate_determining_pair(sys, dp);
      if (!check.ok()) return;
      out.push_back(dp);
      for (Elem c : dp.classes()) {
        dp.w_class = c;
        if (validate_determining_pair(sys, dp).ok()) out.push_back(dp);
      }
      return;
    }
    for (Elem c = 0; c <= max_used + 1; ++c) {
      if (i == 0 && c > 0) break;
      growth[i] = c;
      rec(i + 1, i == 0 ? 0 : std::max(max_used, c));
    }
  };
  rec(0, 0);
  return out;
}

std::string PointLabel::to_string(const AbstractSystem& sys) const {
  std::string s;
  if (pair) s += "pair=(" + elem_name(sys, pair->first) + "," + elem_name(sys, pair->second) + ") ";
  s += "class={";
  bool sep = false;
  for (std::size_t x : members.members()) {
    if (sep) s += ',';
    s += elem_name(sys, static_cast<Elem>(x));
    sep = true;
  }
  return s + "}";
}

Representation simplest_rep(const AbstractSystem& sys, const DeterminingPair& dp) {
  const StarView s(sys);
  const auto m = static_cast<Elem>(sys.size());
  Representation rep;
  std::vector<Elem> point_of(s.size(), PartialMap::kUndefined);
  for (Elem c : dp.classes()) {
    if (dp.w_class && c == *dp.w_class) continue;
    point_of[c] = static_cast<Elem>(rep.carrier.size());
    rep.carrier.push_back(PointLabel{std::nullopt, c, dp.members(c)});
  }
  const std::size_t n = rep.carrier.size();
  for (Elem g = 0; g < m; ++g) {
    std::vector<PartialMap::Point> entries(n, PartialMap::kUndefined);
    for (std::size_t a = 0; a < n; ++a) {
      std::optional<Elem> target;
      for (std::size_t h : rep.carrier[a].members.members()) {
        const Elem c = dp.class_of[s.mul(static_cast<Elem>(h), g)];
        if (target && *target != c)
          throw Error("internal consistency: class " + std::to_string(rep.carrier[a].class_id) + " times " +
                      elem_name(sys, g) + " meets two classes");
        target = c;
      }
      if (target && !(dp.w_class && *target == *dp.w_class)) entries[a] = point_of[*target];
    }
    rep.maps.emplace_back(n, std::move(entries));
  }
  return rep;
}

MapRelations rep_relations(const Representation& rep) { return map_relations(rep.maps); }

Report check_prop1(const AbstractSystem& sys, const DeterminingPair& dp) {
  const StarView s(sys);
  const auto m = static_cast<Elem>(sys.size());
  const auto star = static_cast<Elem>(s.size());
  const MapRelations rel = rep_relations(simplest_rep(sys, dp));
  Report r;
  r.title = "simplest representation relations";
  auto& zeta = r.add("simplest-zeta");
  auto& xi = r.add("simplest-xi");
  auto& delta = r.add("simplest-delta");
  for (Elem g1 = 0; g1 < m; ++g1)
    for (Elem g2 = 0; g2 < m; ++g2) {
      bool zeta_fo = true, xi_fo = true, delta_fo = true;
      for (Elem x = 0; x < star; ++x) {
        const Elem a = s.mul(x, g1), b = s.mul(x, g2);
        if (!dp.in_w(a) && !dp.same(a, b)) zeta_fo = false;
        if (!dp.in_w(a) && !dp.in_w(b) && !dp.same(a, b)) xi_fo = false;
        if (!dp.in_w(a) && dp.in_w(s.mul(a, g2))) delta_fo = false;
      }
      auto w = [&](bool concrete) {
        return Witness{{{"g1", elem_name(sys, g1)}, {"g2", elem_name(sys, g2)}},
                       concrete ? "holds for the maps only" : "holds for the formula only"};
      };
      if (rel.zeta(g1, g2) != zeta_fo) zeta.fail(w(rel.zeta(g1, g2)));
      if (rel.xi(g1, g2) != xi_fo) xi.fail(w(rel.xi(g1, g2)));
      if (rel.delta(g1, g2) != delta_fo) delta.fail(w(rel.delta(g1, g2)));
    }
  return r;
}

MeetSides meet_sides(const AbstractSystem& sys, const DeterminingPair& dp) {
  const auto m = static_cast<Elem>(sys.size());
  const Representation rep = simplest_rep(sys, dp);
  MeetSides out{true, true, {}, {}};
  auto pair = [&](Elem g1, Elem g2, std::string note) {
    return Witness{{{"g1", elem_name(sys, g1)}, {"g2", elem_name(sys, g2)}}, std::move(note)};
  };
  for (Elem g1 = 0; g1 < m; ++g1)
    for (Elem g2 = 0; g2 < m; ++g2) {
      const Elem mt = sys.meet(g1, g2);
      if (out.meet_preserved && rep.maps[mt] != intersect(rep.maps[g1], rep.maps[g2])) {
        out.meet_preserved = false;
        out.meet_witness = pair(g1, g2, "P(g1 meet g2) differs from P(g1) cap P(g2)");
      }
      if (!out.class_conditions) continue;
      if (dp.in_w(g1) && !dp.in_w(mt)) {
        out.class_conditions = false;
        out.class_witness = pair(g1, g2, "g1 in W but g1 meet g2 is not");
      } else if (!dp.in_w(mt) && !dp.same(g1, g2)) {
        out.class_conditions = false;
        out.class_witness = pair(g1, g2, "g1 meet g2 outside W but g1, g2 in different classes");
      } else if (!dp.in_w(g1) && dp.same(g1, g2) && !dp.same(mt, g1)) {
        out.class_conditions = false;
        out.class_witness = pair(g1, g2, "g1 ~ g2 outside W but g1 meet g2 not in their class");
      }
    }
  return out;
}

Report check_prop2(const AbstractSystem& sys, const DeterminingPair& dp) {
  const MeetSides sides = meet_sides(sys, dp);
  Report r;
  r.title = "meet preservation";
  auto& c = r.add("meet-iff-class-conditions");
  c.detail = std::string("meet preserved: ") + (sides.meet_preserved ? "yes" : "no") +
             ", class conditions: " + (sides.class_conditions ? "yes" : "no");
  if (sides.meet_preserved != sides.class_conditions)
    c.fail(sides.meet_preserved ? sides.class_witness : sides.meet_witness);
  return r;
}

Representation sum_reps(const PairClosures& closures, bool parallel) {
  const AbstractSystem& sys = closures.system();
  const auto m = static_cast<Elem>(sys.size());
  const std::size_t pairs = std::size_t{m} * m;
  std::vector<Representation> parts(pairs);
  std::vector<std::exception_ptr> errors(pairs);
  auto build = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < pairs; k += stride) {
      try {
        const auto g1 = static_cast<Elem>(k / m), g2 = static_cast<Elem>(k % m);
        parts[k] = simplest_rep(sys, eps_pair(closures, g1, g2));
        for (auto& p : parts[k].carrier) p.pair = std::make_pair(g1, g2);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t threads = parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1;
  if (threads <= 1) {
    build(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(build, i, threads);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Sequential merge in pair order.
  Representation sum;
  std::vector<std::size_t> offset(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    offset[k] = sum.carrier.size();
    sum.carrier.insert(sum.carrier.end(), parts[k].carrier.begin(), parts[k].carrier.end());
  }
  const std::size_t n = sum.carrier.size();
  for (Elem g = 0; g < m; ++g) {
    std::vector<PartialMap::Point> entries(n, PartialMap::kUndefined);
    for (std::size_t k = 0; k < pairs; ++k) {
      const auto part = parts[k].maps[g].entries();
      for (std::size_t a = 0; a < part.size(); ++a)
        if (part[a] != PartialMap::kUndefined) entries[offset[k] + a] = static_cast<PartialMap::Point>(offset[k] + part[a]);
    }
    sum.maps.emplace_back(n, std::move(entries));
  }
  return sum;
}

Representation sum_reps(const AbstractSystem& sys, bool parallel) { return sum_reps(PairClosures(sys, parallel), parallel); }

Report check_homomorphism(const AbstractSystem& sys, const Representation& rep) {
  const auto m = static_cast<Elem>(sys.size());
  Report r;
  r.title = "homomorphism";
  auto& product = r.add("rep-product");
  auto& meet = r.add("rep-meet");
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      if (rep.maps[sys.mul(x, y)] != compose(rep.maps[y], rep.maps[x]))
        product.fail(Witness{{{"x", elem_name(sys, x)}, {"y", elem_name(sys, y)}}, "P(xy) != P(y) o P(x)"});
      if (rep.maps[sys.meet(x, y)] != intersect(rep.maps[x], rep.maps[y]))
        meet.fail(Witness{{{"x", elem_name(sys, x)}, {"y", elem_name(sys, y)}}, "P(x meet y) != P(x) cap P(y)"});
    }
  return r;
}

namespace {

void compare_relation(const AbstractSystem& sys, const BitMatrix& expected, const BitMatrix& actual, CheckResult& out) {
  const auto m = static_cast<Elem>(sys.size());
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (expected(x, y) != actual(x, y))
        out.fail(Witness{{{"x", elem_name(sys, x)}, {"y", elem_name(sys, y)}},
                         expected(x, y) ? "missing from representation" : "extra in representation"});
}

}  // namespace

Report verify_theorem(const AbstractSystem& sys, TheoremOptions options) {
  Report r;
  r.title = "representation theorem";
  Report hyp = validate(sys);
  r.append(hyp);
  if (!hyp.ok()) {
    auto& c = r.add("hypotheses");
    c.detail = "hypothesis failed: " + hyp.failed_ids().front();
    c.fail(hyp.find(hyp.failed_ids().front())->witnesses.front());
    return r;
  }
  const PairClosures closures(sys, options.parallel);
  Report schemes = check_axiom_schemes(closures);
  r.append(schemes);
  if (!schemes.ok()) {
    auto& c = r.add("hypotheses");
    c.detail = "hypothesis failed: " + schemes.failed_ids().front();
    c.fail(schemes.find(schemes.failed_ids().front())->witnesses.front());
    return r;
  }
  r.add("hypotheses");

  Representation rep;
  try {
    rep = sum_reps(closures, options.parallel);
  } catch (const HypothesisError& e) {
    auto& c = r.add("determining-pairs");
    c.detail = e.what();
    c.fail(e.witness());
    return r;
  }
  auto& pairs = r.add("determining-pairs");
  pairs.detail = "carrier size " + std::to_string(rep.carrier.size());

  const auto m = static_cast<Elem>(sys.size());
  auto& injective = r.add("rep-injective");
  for (Elem x = 0; x < m; ++x)
    for (Elem y = x + 1; y < m; ++y)
      if (rep.maps[x] == rep.maps[y]) injective.fail(Witness{{{"x", elem_name(sys, x)}, {"y", elem_name(sys, y)}}, {}});

  r.append(check_homomorphism(sys, rep));

  const MapRelations rel = rep_relations(rep);
  compare_relation(sys, sys.xi_matrix(), rel.xi, r.add("rep-xi"));
  compare_relation(sys, sys.delta_matrix(), rel.delta, r.add("rep-delta"));
  compare_relation(sys, natural_order(sys), rel.zeta, r.add("rep-zeta"));
  return r;
}

}  // namespace transemi
