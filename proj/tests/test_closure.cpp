#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "support.hpp"
#include "transemi/closure.hpp"
#include "transemi/error.hpp"
#include "transemi/generators.hpp"

using namespace transemi;

namespace {

// Straight transcription of the step operator over all five variables.
Bitset naive_step(const AbstractSystem& sys, const Bitset& h) {
  StarView g(sys);
  const auto m = static_cast<Elem>(sys.size());
  Bitset out(m);
  for (Elem z = 0; z < m; ++z)
    for (Elem u = 0; u < m && !out.test(z); ++u)
      for (Elem v = 0; v < m && !out.test(z); ++v) {
        if (!sys.xi(u, v) || !h.test(u)) continue;
        const Elem w = sys.meet(u, v);
        for (Elem x = 0; x <= m; ++x) {
          const Elem vx = g.mul(v, x);
          if (g.is_e(vx) || !h.test(vx)) continue;
          const Elem wx = g.mul(w, x);
          for (Elem y = 0; y <= m; ++y) {
            if (!g.delta(wx, y)) continue;
            for (Elem t = 0; t <= m; ++t)
              if (g.leq(g.mul(wx, y), g.mul(z, t))) out.set(z);
          }
        }
      }
  return out;
}

std::vector<AbstractSystem> small_corpus() {
  std::vector<AbstractSystem> out;
  for (std::size_t m = 1; m <= 2; ++m)
    for (auto& s : up_to_isomorphism(enumerate_systems(m, true))) out.push_back(s);
  for (const auto& g : generate_corpus(300, 25, 3, 3, 6)) out.push_back(to_abstract(g.system));
  return out;
}

std::vector<Bitset> nonempty_subsets(std::size_t m) {
  std::vector<Bitset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) out.push_back(Bitset::from_mask(m, mask));
  return out;
}

}  // namespace

TEST_CASE("single element closure") {
  auto s1 = testsupport::single(true);
  Bitset g = Bitset::of(1, {0});
  CHECK(f_step(s1, g) == g);
  auto r = f_closure(s1, g);
  CHECK(r.closed_set == g);
  CHECK(r.rounds == 1);
  CHECK(is_closed(s1, g, ClosedMethod::implication));
  CHECK(is_closed(s1, g, ClosedMethod::four_conditions));
  CHECK(least_closed_oracle(s1, g) == g);
}

TEST_CASE("empty set has no closure") {
  auto s1 = testsupport::single(true);
  CHECK_THROWS_AS(f_step(s1, Bitset(1)), Error);
  CHECK_THROWS_AS(f_closure(s1, Bitset(1)), Error);
}

TEST_CASE("step engine matches the naive transcription") {
  for (const auto& sys : small_corpus())
    for (const auto& h : nonempty_subsets(sys.size())) CHECK(f_step(sys, h) == naive_step(sys, h));
}

TEST_CASE("step operator is extensive and monotone") {
  for (const auto& sys : small_corpus()) {
    auto subsets = nonempty_subsets(sys.size());
    for (const auto& a : subsets) {
      CHECK(a.is_subset_of(f_step(sys, a)));
      for (const auto& b : subsets)
        if (a.is_subset_of(b)) CHECK(f_step(sys, a).is_subset_of(f_step(sys, b)));
    }
  }
}

TEST_CASE("closure is idempotent, closed and least") {
  for (const auto& sys : small_corpus()) {
    ClosureEngine engine(sys);
    for (const auto& h : nonempty_subsets(sys.size())) {
      auto r = f_closure(engine, h);
      CHECK(h.is_subset_of(r.closed_set));
      CHECK(r.rounds <= sys.size());
      CHECK(r.chain.size() == r.rounds + 1);
      CHECK(f_closure(engine, r.closed_set).closed_set == r.closed_set);
      CHECK(is_closed(sys, r.closed_set, ClosedMethod::implication));
      CHECK(least_closed_oracle(sys, h) == r.closed_set);
      for (const auto& w : r.witnesses) {
        auto tuple = admitting_tuple(sys, w.z, r.chain[w.round - 1]);
        REQUIRE(tuple);
        CHECK(*tuple == w.tuple);
      }
    }
    CHECK(f_closure(engine, Bitset::full(sys.size())).closed_set == Bitset::full(sys.size()));
  }
}

TEST_CASE("closedness methods agree") {
  for (const auto& sys : small_corpus())
    for (const auto& h : nonempty_subsets(sys.size()))
      CHECK(is_closed(sys, h, ClosedMethod::implication) == is_closed(sys, h, ClosedMethod::four_conditions));
}

TEST_CASE("witness formulas agree with iterated steps") {
  for (const auto& sys : small_corpus()) {
    for (const auto& h : nonempty_subsets(sys.size())) {
      Bitset one = f_step(sys, h), two = f_step(sys, one), three = f_step(sys, two);
      for (Elem z = 0; z < sys.size(); ++z) {
        CHECK(xn_member_direct(sys, z, h, 1).member == one.test(z));
        auto x2 = xn_member_direct(sys, z, h, 2);
        CHECK(x2.member == two.test(z));
        if (x2.member) {
          REQUIRE(x2.tree.size() == 4);
          CHECK(x2.tree[1]);
        }
        auto x3 = xn_member(sys, z, h, 3);
        CHECK_FALSE(x3.direct);
        CHECK(x3.member == three.test(z));
        if (h.test(z)) CHECK(x3.member);
      }
    }
  }
}

TEST_CASE("oracle budget follows the environment") {
  CHECK(oracle_budget() == kDefaultOracleBudget);
  setenv("TRANSEMI_ORACLE_BUDGET", "1", 1);
  CHECK(oracle_budget() == 1);
  auto sys = testsupport::load_abstract("compat_fail.json");
  CHECK_THROWS_AS(least_closed_oracle(sys, Bitset::of(4, {0})), Error);
  unsetenv("TRANSEMI_ORACLE_BUDGET");
}

TEST_CASE("schemes hold on the single element system") {
  CHECK(check_axiom_schemes(testsupport::single(true)).ok());
}

TEST_CASE("adjacency scheme fails without delta") {
  auto sys = testsupport::load_abstract("s1_no_delta.json");
  REQUIRE(validate(sys).ok());
  auto r = check_axiom_schemes(sys);
  CHECK(r.find("scheme-order")->pass);
  CHECK(r.find("scheme-compatibility")->pass);
  const auto* adj = r.find("scheme-adjacency");
  CHECK_FALSE(adj->pass);
  REQUIRE(!adj->witnesses.empty());
  CHECK(adj->witnesses[0].to_string().find("x=0 y=0") != std::string::npos);
}

TEST_CASE("compatibility scheme fails on the golden system") {
  auto sys = testsupport::load_abstract("compat_fail.json");
  REQUIRE(validate(sys).ok());
  auto r = check_axiom_schemes(sys);
  CHECK(r.find("scheme-order")->pass);
  const auto* compat = r.find("scheme-compatibility");
  CHECK_FALSE(compat->pass);
  CHECK(compat->violations == 2);
  CHECK(compat->witnesses[0].to_string().find("x=1 y=2") != std::string::npos);
}

TEST_CASE("pair closures match direct closures") {
  for (const auto& sys : small_corpus()) {
    PairClosures seq(sys), par(sys, true);
    for (Elem x = 0; x < sys.size(); ++x)
      for (Elem y = 0; y < sys.size(); ++y) {
        auto direct = f_closure(sys, Bitset::of(sys.size(), {x, y}));
        CHECK(seq.of(x, y) == direct.closed_set);
        CHECK(seq.rounds(x, y) == direct.rounds);
        CHECK(par.of(x, y) == seq.of(x, y));
      }
  }
}

TEST_CASE("schemes hold on encoded transformation systems") {
  for (const auto& g : generate_corpus(400, 20, 4, 3, 32)) CHECK(check_axiom_schemes(to_abstract(g.system)).ok());
}
