#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "transemi/abstract_system.hpp"
#include "transemi/instance_io.hpp"
#include "transemi/trans_system.hpp"

namespace transemi {

// k random partial maps on n points drawn from a seeded mt19937_64 stream.
TransformationsInstance random_maps(std::uint64_t seed, std::size_t points, std::size_t maps);

struct GeneratedSystem {
  std::uint64_t seed = 0;
  TransformationsInstance seeds;
  TransSystem system;
};

// Seeded instance with 1..max_points points and 1..max_maps seed maps whose
// closure fits in cap; oversized draws are redrawn from the same stream.
GeneratedSystem generate_system(std::uint64_t seed, std::size_t max_points, std::size_t max_maps, std::size_t cap);

// generate_system for seeds first_seed, first_seed+1, ...
std::vector<GeneratedSystem> generate_corpus(std::uint64_t first_seed, std::size_t count, std::size_t max_points,
                                             std::size_t max_maps, std::size_t cap);

// Every system on m <= 2 elements (unfiltered unless valid_only), or, for
// m = 3, every system passing validate. Throws Error for m > 3.
std::vector<AbstractSystem> enumerate_systems(std::size_t m, bool valid_only);

// Pairs (mul, meet) of an associative table and a semilattice with
// left distributivity, on m <= 3 elements; relations are left empty.
std::vector<AbstractSystem> enumerate_distributive_tables(std::size_t m);

// Keeps the first system of each isomorphism class.
std::vector<AbstractSystem> up_to_isomorphism(const std::vector<AbstractSystem>& systems);

}  // namespace transemi
