#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ordpat/poset.hpp"
#include "ordpat/setup.hpp"
#include "ordpat/structure.hpp"

namespace ordpat {

// All intersections of subfamilies, including the empty intersection
// (the full universe) when `include_full` is set.
std::vector<Bitset> intersection_closure(std::vector<Bitset> family,
                                         std::size_t universe,
                                         bool include_full);

// ---------------------------------------------------------------- posets

struct AntichainPoset {
  Poset base;
  // antichains[i] is the member behind order element i (ids are the set
  // renderings, so both follow the id order).
  std::vector<Bitset> antichains;
  Poset order;
  std::vector<std::size_t> embedding;  // base element -> order index of {a}
  bool embedding_ok = false;
};

// Enumerates every antichain (the empty one included) and builds the
// completed poset. Throws CapExceeded past `max_antichains`.
AntichainPoset antichain_completion(const Poset& base,
                                    std::size_t max_antichains = 1000000,
                                    Exec ex = default_exec());

std::vector<Bitset> enumerate_antichains(const Poset& base,
                                         std::size_t max_antichains,
                                         Exec ex = default_exec());

struct BoldiVignaReport {
  bool holds = true;
  std::optional<std::pair<Bitset, Bitset>> witness;  // failing pair
};

// For every pair of antichains, the intersection of their downsets must
// again be the downset of an antichain (its maximal elements).
BoldiVignaReport check_boldi_vigna(const Poset& base,
                                   std::size_t max_antichains = 1000000,
                                   Exec ex = default_exec());

struct MultilatticeLinkReport {
  bool completion_is_lattice = false;
  bool base_is_meet_multisemilattice = false;
  bool implication_holds = false;
};

// Computes both sides of "completed poset is a lattice implies the base
// has all multi-infima of nonempty finite subsets" independently.
MultilatticeLinkReport antichain_to_multilattice_check(
    const Poset& base, std::size_t max_antichains = 1000000,
    Exec ex = default_exec());

struct DMResult {
  Poset base;
  std::vector<Bitset> cuts;  // subsets of base, canonical order
  Poset lattice;             // inclusion order over cuts, set-text ids
  std::vector<std::size_t> embedding;  // base element -> cut index of its ideal
  bool embedding_ok = false;
  bool base_is_lattice = false;
  bool isomorphic_to_base = false;
  bool compared_with_synthetic_bottom = false;
};

// Cut completion: the closure system generated by the principal ideals
// and the whole set under intersection, ordered by inclusion.
DMResult dedekind_macneille(const Poset& base, std::size_t max_cuts = 1000000);

// ---------------------------------------------------------------- setups

// The setup lifted to antichains of descriptions, with each object mapped
// to the singleton of its old description. Finite-fragment spaces get a
// materialized twin over an explicit antichain poset; intensional spaces
// are served through the base space oracle.
class AntichainSetupCompletion {
 public:
  AntichainSetupCompletion(const PatternSetup& base, bool augment_top,
                           std::size_t max_antichains = 1000000,
                           Exec ex = default_exec());

  const PatternSetup& base() const { return base_; }
  bool augmented() const { return augmented_; }

  // Intersection of the member extents; everything for the empty antichain.
  Bitset ext_of(const Antichain& a) const;

  // Definable sets of the completion: all intersections of base extents.
  std::vector<Bitset> extents() const;

  // Greatest common antichain of an object set, i.e. the maximal common
  // descriptions of the base.
  MinfResult intent_of(const Bitset& objects) const;

  // Literal structure check on the completed setup. The empty object set
  // consults the base space for a dominating maximal antichain; nonempty
  // sets enumerate the antichains inside the common-description subposet
  // and look for one that dominates them all.
  SweepReport is_structure(Exec ex = default_exec(),
                           std::size_t max_objects = 20) const;

  // The same setup spelled out over an explicit poset of antichains.
  // Absent when the base space cannot materialize its fragment.
  const std::optional<PatternSetup>& materialized() const {
    return materialized_;
  }
  const std::optional<AntichainPoset>& fragment_antichains() const {
    return fragment_antichains_;
  }

 private:
  PatternSetup base_;
  bool augmented_;
  std::optional<RelevantFragment> fragment_;  // top included when augmented
  std::optional<AntichainPoset> fragment_antichains_;
  std::optional<PatternSetup> materialized_;
};

struct CompletionConcept {
  Bitset extent;
  Antichain intent;
};

struct CompletionConceptLattice {
  std::vector<CompletionConcept> concepts;  // canonical extent order
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
};

CompletionConceptLattice completion_concept_lattice(
    const AntichainSetupCompletion& c, Exec ex = default_exec(),
    std::size_t max_objects = 20);

// The setup lifted to arbitrary description downsets: a structure for
// every base, with cov itself as the intent.
class DirectSetupCompletion {
 public:
  explicit DirectSetupCompletion(const PatternSetup& base) : base_(base) {}

  const PatternSetup& base() const { return base_; }
  CoverResult intent_of(const Bitset& objects) const;
  Bitset ext_of(const std::vector<Description>& downset) const;
  std::vector<Bitset> extents() const;
  std::vector<Description> delta_ideal(std::size_t g) const;

  // Galois sanity sweep: the intent's extent encloses every object set.
  bool verify_structure(std::size_t max_objects = 20) const;

 private:
  PatternSetup base_;
};

DirectSetupCompletion direct_completion(const PatternSetup& base);

struct CompletionReport {
  std::size_t base_extent_count = 0;
  std::size_t completed_extent_count = 0;
  std::vector<Bitset> new_extents;  // canonical order
  bool is_structure_after = false;
};

enum class CompletionKind { Antichain, Direct };

CompletionReport completion_report(const PatternSetup& s, CompletionKind kind,
                                   bool augment_top,
                                   Exec ex = default_exec(),
                                   std::size_t max_objects = 20,
                                   std::size_t max_antichains = 1000000);

struct IffReport {
  SweepReport multistructure;
  SweepReport completion_structure;
  bool equivalent = false;
  bool extents_law = false;  // completed extents == closure of base extents
  std::size_t base_extents = 0;
  std::size_t completed_extents = 0;
};

// Evaluates both sides of "the antichain completion is a structure
// exactly when the base has all maximal common descriptions", plus the
// extent closure law.
IffReport completion_iff_theorem(const PatternSetup& s, bool augment_top,
                                 Exec ex = default_exec(),
                                 std::size_t max_objects = 20,
                                 std::size_t max_antichains = 1000000);

}  // namespace ordpat
