#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ordpat/poset.hpp"
#include "ordpat/setup.hpp"

namespace ordpat {

// A setup is a pattern structure when every object subset has a single
// maximal common description dominating all common ones.
SweepReport is_pattern_structure(const PatternSetup& s,
                                 Exec ex = default_exec(),
                                 std::size_t max_objects = 20);

// The greatest common description of an object set. Throws NotAStructure
// when several incomparable maximal ones exist (or none dominates).
Description intent(const PatternSetup& s, const Bitset& objects);

struct Concept {
  Bitset extent;
  Description intent;
};

struct ConceptLattice {
  std::vector<Concept> concepts;  // canonical extent order
  // Covering pairs of concept indices, lower extent first.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;

  bool leq(std::size_t i, std::size_t j) const {
    return concepts[i].extent.is_subset_of(concepts[j].extent);
  }
};

// Enumerates definable extents, closes them under pairwise intersection,
// and pairs each closed extent with its intent.
ConceptLattice concept_lattice(const PatternSetup& s, Exec ex = default_exec(),
                               std::size_t max_objects = 20);

// Smallest definable superset of an object set.
Bitset closure(const PatternSetup& s, const Bitset& objects);

// The extent order as an explicit poset (ids are extent renderings), for
// classification checks against lattice laws.
Poset extent_order_poset(const ConceptLattice& lat, const PatternSetup& s);

}  // namespace ordpat
