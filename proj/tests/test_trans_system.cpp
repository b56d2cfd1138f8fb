#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "transemi/closure.hpp"
#include "transemi/error.hpp"
#include "transemi/generators.hpp"
#include "transemi/trans_system.hpp"

using namespace transemi;
using P = PartialMap::Point;
constexpr P U = PartialMap::kUndefined;

namespace {

TransSystem delta0_id() {
  std::vector<PartialMap> seeds{PartialMap(2, {0, U}), PartialMap::identity(2)};
  return TransSystem::generate(seeds, 16);
}

std::size_t index_of(const TransSystem& sys, const PartialMap& f) {
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (sys[i] == f) return i;
  return sys.size();
}

}  // namespace

TEST_CASE("generation examples") {
  auto sys = delta0_id();
  REQUIRE(sys.size() == 2);
  CHECK(sys[0] == PartialMap(2, {0, U}));
  CHECK(sys.zeta()(0, 1));
  CHECK_FALSE(sys.zeta()(1, 0));

  std::vector<PartialMap> empty{PartialMap(3)};
  CHECK(TransSystem::generate(empty, 4).size() == 1);
  std::vector<PartialMap> id{PartialMap::identity(3)};
  CHECK(TransSystem::generate(id, 4).size() == 1);
}

TEST_CASE("generation respects the cap") {
  std::vector<PartialMap> seeds{PartialMap(3, {1, 2, 0}), PartialMap(3, {0, 0, U})};
  CHECK_THROWS_AS(TransSystem::generate(seeds, 2), Error);
}

TEST_CASE("semicompatibility and semiadjacency examples") {
  std::vector<PartialMap> a{PartialMap(2, {1, U}), PartialMap(2, {1, 1})};
  CHECK(map_relations(a).xi(0, 1));
  std::vector<PartialMap> b{PartialMap(2, {0, U}), PartialMap(2, {1, U})};
  CHECK_FALSE(map_relations(b).xi(0, 1));
  std::vector<PartialMap> c{PartialMap(2, {1, U}), PartialMap(2, {U, 0})};
  CHECK(map_relations(c).delta(0, 1));
  std::vector<PartialMap> d{PartialMap::identity(2), PartialMap(2, {0, U})};
  CHECK_FALSE(map_relations(d).delta(0, 1));
}

TEST_CASE("generated systems are closed and relations are consistent") {
  for (const auto& g : generate_corpus(1, 30, 4, 3, 64)) {
    const auto& sys = g.system;
    const std::size_t m = sys.size();
    for (Elem i = 0; i < m; ++i) {
      CHECK(sys.xi()(i, i));
      for (Elem j = 0; j < m; ++j) {
        CHECK(sys[sys.compose(i, j)] == compose(sys[i], sys[j]));
        CHECK(sys[sys.meet(i, j)] == intersect(sys[i], sys[j]));
        CHECK(sys.xi()(i, j) == sys.xi()(j, i));
        if (sys.zeta()(i, j)) CHECK(sys.xi()(i, j));
      }
    }
    for (const auto& s : g.seeds.maps) CHECK(index_of(sys, s) < m);
    CHECK(check_lemma1(sys).ok());
  }
}

TEST_CASE("lemma checks on the small examples") {
  CHECK(check_lemma1(delta0_id()).ok());
  std::vector<PartialMap> empty{PartialMap(2)};
  auto e = TransSystem::generate(empty, 4);
  CHECK(check_lemma1(e).ok());
  CHECK(check_domain_meet(e, Bitset::of(1, {0})).ok());
}

TEST_CASE("domain of closure members contains the common domain") {
  auto sys = delta0_id();
  for (std::size_t i = 0; i < sys.size(); ++i) CHECK(check_domain_meet(sys, Bitset::singleton(2, i)).ok());
  CHECK(check_domain_meet(sys, Bitset::full(2)).ok());
  for (const auto& g : generate_corpus(50, 20, 3, 3, 32)) {
    PairClosures pc(to_abstract(g.system));
    CHECK(check_domain_meet_small(g.system, pc).ok());
  }
}

TEST_CASE("encoding reverses composition order") {
  auto sys = delta0_id();
  auto a = to_abstract(sys);
  CHECK(a.size() == 2);
  CHECK(validate(a).ok());
  std::vector<PartialMap> seeds{PartialMap(3, {1, U, U}), PartialMap(3, {U, 2, U})};
  auto t = TransSystem::generate(seeds, 16);
  auto abs = to_abstract(t);
  for (Elem x = 0; x < t.size(); ++x)
    for (Elem y = 0; y < t.size(); ++y) CHECK(t[abs.mul(x, y)] == compose(t[y], t[x]));
}

TEST_CASE("single map system encodes to the trivial system") {
  std::vector<PartialMap> id{PartialMap::identity(2)};
  auto a = to_abstract(TransSystem::generate(id, 4));
  CHECK(a.size() == 1);
  CHECK(a.mul(0, 0) == 0);
  CHECK(a.xi(0, 0));
  CHECK(a.delta(0, 0));
}
