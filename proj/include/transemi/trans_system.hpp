#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "transemi/abstract_system.hpp"
#include "transemi/bitset.hpp"
#include "transemi/partial_map.hpp"
#include "transemi/report.hpp"

namespace transemi {

// Inclusion, semicompatibility and semiadjacency of a family of maps on one carrier.
struct MapRelations {
  BitMatrix zeta;   // f subset of g
  BitMatrix xi;     // f restricted to dom g equals g restricted to dom f
  BitMatrix delta;  // image f within dom g
};

MapRelations map_relations(std::span<const PartialMap> maps);

// A finite set of partial maps closed under composition and intersection.
class TransSystem {
 public:
  std::size_t base_size() const { return base_size_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<PartialMap>& elements() const { return elements_; }
  const PartialMap& operator[](std::size_t i) const { return elements_[i]; }

  // Index of elements[i] o elements[j] (apply j first).
  Elem compose(Elem i, Elem j) const { return compose_[i * size() + j]; }
  Elem meet(Elem i, Elem j) const { return meet_[i * size() + j]; }
  const BitMatrix& zeta() const { return relations_.zeta; }
  const BitMatrix& xi() const { return relations_.xi; }
  const BitMatrix& delta() const { return relations_.delta; }

  // Least superset of seeds closed under compose and intersect. Seeds come
  // first, then elements in discovery order. Throws Error("cap exceeded").
  static TransSystem generate(std::span<const PartialMap> seeds, std::size_t cap);

 private:
  std::size_t base_size_ = 0;
  std::vector<PartialMap> elements_;
  std::vector<Elem> compose_;
  std::vector<Elem> meet_;
  MapRelations relations_;
};

const BitMatrix& xi_rel(const TransSystem& sys);
const BitMatrix& delta_rel(const TransSystem& sys);

// Re-encodes as an abstract system with x.y := y o x and meet := intersection.
AbstractSystem to_abstract(const TransSystem& sys);

// Semiadjacency versus domains of composites, and its left-ideal property.
Report check_lemma1(const TransSystem& sys);

class PairClosures;

// Every member of the closure of h (computed on the abstract image) has a
// domain containing the common domain of h.
Report check_domain_meet(const TransSystem& sys, const Bitset& h);
// Same, for every h with one or two members, reusing precomputed closures of
// to_abstract(sys).
Report check_domain_meet_small(const TransSystem& sys, const PairClosures& closures);

}  // namespace transemi
