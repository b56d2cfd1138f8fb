#include "transemi/trans_system.hpp"

#include <unordered_map>

#include "transemi/closure.hpp"
#include "transemi/error.hpp"

namespace transemi {

MapRelations map_relations(std::span<const PartialMap> maps) {
  const std::size_t k = maps.size();
  MapRelations r{BitMatrix(k), BitMatrix(k), BitMatrix(k)};
  std::vector<SubsetA> domains, images;
  for (const auto& f : maps) {
    domains.push_back(domain(f));
    images.push_back(image(f));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      r.zeta.set(i, j, maps[i].is_subset_of(maps[j]));
      r.xi.set(i, j, compose(maps[i], identity_on(domains[j])) == compose(maps[j], identity_on(domains[i])));
      r.delta.set(i, j, images[i].is_subset_of(domains[j]));
    }
  return r;
}

TransSystem TransSystem::generate(std::span<const PartialMap> seeds, std::size_t cap) {
  if (seeds.empty()) throw Error("no seed maps");
  TransSystem sys;
  sys.base_size_ = seeds.front().base_size();
  std::unordered_map<PartialMap, Elem, PartialMapHash> index;
  auto intern = [&](PartialMap f) -> Elem {
    auto [it, inserted] = index.try_emplace(f, static_cast<Elem>(sys.elements_.size()));
    if (inserted) {
      if (sys.elements_.size() == cap) throw Error("cap exceeded: closure has more than " + std::to_string(cap) + " maps");
      sys.elements_.push_back(std::move(f));
    }
    return it->second;
  };
  for (const auto& s : seeds) {
    if (s.base_size() != sys.base_size_) throw CarrierMismatch();
    intern(s);
  }

  // Saturate: element i is combined with every j <= i once it is reached.
  std::vector<std::pair<std::pair<Elem, Elem>, Elem>> comp_entries, meet_entries;
  for (std::size_t i = 0; i < sys.elements_.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      // Copies: intern may reallocate elements_.
      const PartialMap a = sys.elements_[i], b = sys.elements_[j];
      const auto ei = static_cast<Elem>(i), ej = static_cast<Elem>(j);
      comp_entries.push_back({{ei, ej}, intern(transemi::compose(a, b))});
      comp_entries.push_back({{ej, ei}, intern(transemi::compose(b, a))});
      meet_entries.push_back({{ei, ej}, intern(transemi::intersect(a, b))});
    }

  const std::size_t k = sys.elements_.size();
  sys.compose_.assign(k * k, 0);
  sys.meet_.assign(k * k, 0);
  for (const auto& [ij, v] : comp_entries) sys.compose_[ij.first * k + ij.second] = v;
  for (const auto& [ij, v] : meet_entries) {
    sys.meet_[ij.first * k + ij.second] = v;
    sys.meet_[ij.second * k + ij.first] = v;
  }
  sys.relations_ = map_relations(sys.elements_);
  return sys;
}

const BitMatrix& xi_rel(const TransSystem& sys) { return sys.xi(); }
const BitMatrix& delta_rel(const TransSystem& sys) { return sys.delta(); }

AbstractSystem to_abstract(const TransSystem& sys) {
  const std::size_t k = sys.size();
  std::vector<Elem> mul(k * k), meet(k * k);
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) {
      mul[x * k + y] = sys.compose(y, x);
      meet[x * k + y] = sys.meet(x, y);
    }
  return AbstractSystem(k, std::move(mul), std::move(meet), sys.xi(), sys.delta());
}

Report check_lemma1(const TransSystem& sys) {
  const auto k = static_cast<Elem>(sys.size());
  Report r;
  r.title = "semiadjacency lemma";
  auto& domain_form = r.add("semiadjacency-domain");
  auto& left_ideal = r.add("semiadjacency-left-ideal");
  std::vector<SubsetA> domains;
  for (const auto& f : sys.elements()) domains.push_back(domain(f));
  for (Elem f = 0; f < k; ++f)
    for (Elem g = 0; g < k; ++g) {
      const bool related = sys.delta()(f, g);
      const bool covers = domains[f].is_subset_of(domains[sys.compose(g, f)]);
      if (related != covers)
        domain_form.fail(Witness{{{"f", std::to_string(f)}, {"g", std::to_string(g)}},
                                 related ? "related but domain shrinks" : "domain kept but not related"});
      if (!related) continue;
      for (Elem h = 0; h < k; ++h)
        if (!sys.delta()(sys.compose(f, h), g))
          left_ideal.fail(Witness{{{"f", std::to_string(f)}, {"g", std::to_string(g)}, {"h", std::to_string(h)}}, {}});
    }
  return r;
}

namespace {

void check_members(const TransSystem& sys, const Bitset& h, const Bitset& closure, CheckResult& out) {
  SubsetA common = SubsetA::full(sys.base_size());
  for (std::size_t i : h.members()) common &= domain(sys[i]);
  for (std::size_t phi : closure.members())
    if (!common.is_subset_of(domain(sys[phi])))
      out.fail(Witness{{{"H", h.to_string()}, {"phi", std::to_string(phi)}},
                       "common domain " + common.to_string() + " not within " + domain(sys[phi]).to_string()});
}

}  // namespace

Report check_domain_meet(const TransSystem& sys, const Bitset& h) {
  const AbstractSystem abs = to_abstract(sys);
  const ClosureResult closure = f_closure(abs, h);
  Report r;
  r.title = "domain meet";
  check_members(sys, h, closure.closed_set, r.add("closure-domain-meet"));
  return r;
}

Report check_domain_meet_small(const TransSystem& sys, const PairClosures& closures) {
  const auto k = static_cast<Elem>(sys.size());
  Report r;
  r.title = "domain meet";
  auto& check = r.add("closure-domain-meet");
  for (Elem x = 0; x < k; ++x)
    for (Elem y = x; y < k; ++y) {
      Bitset h = Bitset::singleton(k, x);
      h.set(y);
      check_members(sys, h, closures.of(x, y), check);
    }
  return r;
}

}  // namespace transemi
