#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "transemi/abstract_system.hpp"
#include "transemi/bitset.hpp"
#include "transemi/report.hpp"

namespace transemi {

// Variables of one step of the closure operator: u, v in G; x, y, t in G*.
// The tuple admits z when u xi v, (u meet v)x |- y, (u meet v)xy <= zt and
// u, vx lie in the current set.
struct StepTuple {
  Elem u = 0, v = 0, x = 0, y = 0, t = 0;
  friend bool operator==(const StepTuple&, const StepTuple&) = default;
};

Witness describe(const AbstractSystem& sys, const StepTuple& tuple);

// First admitting tuple for z over h, in lexicographic (u,v,x,y,t) order with
// e last among x, y, t.
std::optional<StepTuple> admitting_tuple(const AbstractSystem& sys, Elem z, const Bitset& h);

// Precomputed tables for fast step evaluation on one system.
class ClosureEngine {
 public:
  explicit ClosureEngine(const AbstractSystem& sys);

  const AbstractSystem& system() const { return *sys_; }
  // One application of the step operator. Throws Error on empty h.
  Bitset step(const Bitset& h) const;

 private:
  const AbstractSystem* sys_;
  std::vector<Elem> star_mul_;       // (m+1)^2, index m is e
  std::vector<Bitset> extend_;       // extend_[a] = {a y | a |- y, y in G*}
  std::vector<Bitset> dominated_;    // dominated_[b] = {z | b <= z t for some t in G*}
};

Bitset f_step(const AbstractSystem& sys, const Bitset& h);

struct ClosureWitness {
  Elem z = 0;
  std::size_t round = 0;
  StepTuple tuple;
};

struct ClosureResult {
  Bitset closed_set;
  // Step applications performed, counting the final one that changed nothing.
  std::size_t rounds = 0;
  std::vector<Bitset> chain;  // chain[k] is the set after k steps
  std::vector<ClosureWitness> witnesses;
};

// Iterates the step operator to its fixpoint. Throws Error on empty h.
ClosureResult f_closure(const ClosureEngine& engine, const Bitset& h, bool with_witnesses = true);
ClosureResult f_closure(const AbstractSystem& sys, const Bitset& h);

enum class ClosedMethod { implication, four_conditions };

bool is_closed(const AbstractSystem& sys, const Bitset& h, ClosedMethod method);

// Default bound on |G| for the exhaustive oracle; TRANSEMI_ORACLE_BUDGET overrides.
inline constexpr std::size_t kDefaultOracleBudget = 12;
std::size_t oracle_budget();

// Least closed superset of h found by intersecting every closed superset.
// Test oracle only; throws Error when |G| exceeds the budget.
Bitset least_closed_oracle(const AbstractSystem& sys, const Bitset& h);

struct XnResult {
  bool member = false;
  bool direct = false;  // decided by direct witness-tree search
  // Witness tree, 1-based heap layout: node i has children 2i and 2i+1.
  std::vector<std::optional<StepTuple>> tree;
};

inline constexpr std::size_t kXnDirectMaxDepth = 2;
inline constexpr std::size_t kXnDirectMaxSize = 6;

// Membership of z in the n-th iterate of the step operator on h, with a witness tree.
XnResult xn_member(const AbstractSystem& sys, Elem z, const Bitset& h, std::size_t n);
// Always uses the direct tree search regardless of the size caps.
XnResult xn_member_direct(const AbstractSystem& sys, Elem z, const Bitset& h, std::size_t n);

// Closures of all singletons and pairs, computed once per system.
class PairClosures {
 public:
  PairClosures(const AbstractSystem& sys, bool parallel = false);

  const AbstractSystem& system() const { return engine_.system(); }
  const ClosureEngine& engine() const { return engine_; }
  const Bitset& of(Elem x, Elem y) const;
  const Bitset& of(Elem x) const { return of(x, x); }
  std::size_t rounds(Elem x, Elem y) const;

 private:
  std::size_t slot(Elem x, Elem y) const;

  ClosureEngine engine_;
  std::vector<Bitset> sets_;
  std::vector<std::size_t> rounds_;
};

// Order, compatibility and adjacency schemes, checked through the closures.
Report check_axiom_schemes(const PairClosures& closures);
Report check_axiom_schemes(const AbstractSystem& sys);

}  // namespace transemi
