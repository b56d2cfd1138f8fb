#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transemi/abstract_system.hpp"
#include "transemi/partial_map.hpp"
#include "transemi/report.hpp"
#include "transemi/trans_system.hpp"

namespace transemi {

class PairClosures;

// A right-regular equivalence on G* given as a partition, plus an optional
// excluded class. Class ids are the least member of each class; index
// size() of class_of is the adjoined identity e.
struct DeterminingPair {
  std::vector<Elem> class_of;
  std::optional<Elem> w_class;

  bool in_w(Elem x) const { return w_class && class_of[x] == *w_class; }
  bool same(Elem x, Elem y) const { return class_of[x] == class_of[y]; }
  // Canonical class ids in ascending order.
  std::vector<Elem> classes() const;
  Bitset members(Elem class_id) const;

  friend bool operator==(const DeterminingPair&, const DeterminingPair&) = default;
};

// Relabels a partition so each class id is its least member.
std::vector<Elem> canonical_classes(const std::vector<Elem>& class_of);

// Thrown when an input system does not satisfy the representation hypotheses.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(const std::string& what, Witness witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

// Pair built from the closure F of {g1, g2}: x ~ y iff x meet y in F or both
// lie outside F; e forms its own class; W = G \ F when nonempty.
DeterminingPair eps_pair(const PairClosures& closures, Elem g1, Elem g2);
DeterminingPair eps_pair(const AbstractSystem& sys, Elem g1, Elem g2);

Report validate_determining_pair(const AbstractSystem& sys, const DeterminingPair& dp);

// Every right-regular partition of G* with every admissible excluded class.
std::vector<DeterminingPair> enumerate_determining_pairs(const AbstractSystem& sys);

struct PointLabel {
  std::optional<std::pair<Elem, Elem>> pair;  // set for points of a sum
  Elem class_id = 0;
  Bitset members;  // over G*

  std::string to_string(const AbstractSystem& sys) const;
};

struct Representation {
  std::vector<PointLabel> carrier;
  std::vector<PartialMap> maps;  // maps[g] acts on carrier indices
};

// Action of G on the classes other than W: class a goes to the class
// containing H_a g. Throws Error when H_a g meets two classes.
Representation simplest_rep(const AbstractSystem& sys, const DeterminingPair& dp);

MapRelations rep_relations(const Representation& rep);

// Simplest-representation relations against their first-order descriptions.
Report check_prop1(const AbstractSystem& sys, const DeterminingPair& dp);

struct MeetSides {
  bool meet_preserved = false;    // P(g1 meet g2) = P(g1) cap P(g2) for all g1, g2
  bool class_conditions = false;  // the three class conditions for all g1, g2
  Witness meet_witness;           // first failure of each side, when failing
  Witness class_witness;
};

MeetSides meet_sides(const AbstractSystem& sys, const DeterminingPair& dp);
// Passes iff both sides of meet_sides agree.
Report check_prop2(const AbstractSystem& sys, const DeterminingPair& dp);

// Disjoint sum of the simplest representations of eps_pair(g1, g2) over all
// ordered pairs. Throws HypothesisError when a pair is not determining.
Representation sum_reps(const PairClosures& closures, bool parallel = false);
Representation sum_reps(const AbstractSystem& sys, bool parallel = false);

// Product and meet preservation: P(xy) = P(y) o P(x), P(x meet y) = P(x) cap P(y).
Report check_homomorphism(const AbstractSystem& sys, const Representation& rep);

struct TheoremOptions {
  bool parallel = false;
};

// Hypotheses, axiom schemes, then the sum representation: injective,
// homomorphic, and carrying xi, delta and the order exactly.
Report verify_theorem(const AbstractSystem& sys, TheoremOptions options = {});

}  // namespace transemi
