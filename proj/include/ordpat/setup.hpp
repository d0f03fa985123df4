#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordpat/bitset.hpp"
#include "ordpat/description.hpp"
#include "ordpat/exec.hpp"
#include "ordpat/space.hpp"

namespace ordpat {

// Canonically sorted set of pairwise-incomparable descriptions.
struct Antichain {
  std::vector<Description> members;

  bool operator==(const Antichain& o) const { return members == o.members; }
};

// Validates pairwise incomparability under the space order.
Antichain make_antichain(const Space& space, std::vector<Description> members);

void sort_canonical(std::vector<Bitset>& family);
bool family_contains(const std::vector<Bitset>& sorted_family, const Bitset& s);

// Covering pairs (lower index, upper index) of the strict inclusion order
// over a family of sets.
std::vector<std::pair<std::size_t, std::size_t>> inclusion_hasse(
    const std::vector<Bitset>& family);

// "{g1,g2}" with members listed in id order; "{}" for the empty set.
std::string set_text(const std::vector<std::string>& ids, const Bitset& s);

// A pattern setup: objects, a description space, and a total map from
// objects to descriptions. Immutable; the relevant fragment (when the
// space can materialize principal ideals) and per-candidate extents are
// computed at construction so reads need no synchronization.
class PatternSetup {
 public:
  PatternSetup(std::vector<std::string> objects, SpacePtr space,
               std::vector<Description> delta);

  std::size_t object_count() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t object_index(const std::string& id) const;
  const Space& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Description& delta(std::size_t g) const { return delta_[g]; }
  const std::vector<Description>& deltas() const { return delta_; }

  Bitset ext(const Description& d) const;
  std::size_t support(const Description& d) const { return ext(d).count(); }

  bool fragment_available() const { return fragment_.has_value(); }
  const RelevantFragment& fragment() const;  // throws InfiniteIdeal

  // Candidate descriptions whose extents exhaust the extents of the whole
  // space: the fragment when available, otherwise the space's finite
  // representative set. Parallel array of cached extents.
  const std::vector<Description>& candidates() const { return candidates_; }
  const std::vector<Bitset>& candidate_extents() const {
    return candidate_exts_;
  }

  Bitset object_subset(const std::vector<std::string>& ids) const;
  std::vector<std::string> object_ids(const Bitset& s) const;
  Bitset empty_objects() const { return Bitset(objects_.size()); }
  Bitset all_objects() const { return Bitset::full(objects_.size()); }

  PatternSetup with_top() const;

 private:
  std::vector<std::string> objects_;
  SpacePtr space_;
  std::vector<Description> delta_;
  std::optional<RelevantFragment> fragment_;
  std::vector<Description> candidates_;
  std::vector<Bitset> candidate_exts_;
};

// Common descriptions of an object set. The empty object set covers the
// whole space, which is kept symbolic by default; infinite spaces also
// report some nonempty covers symbolically through their maximals.
struct CoverResult {
  enum class Kind { Explicit, All, Symbolic };
  Kind kind = Kind::Explicit;
  std::vector<Description> members;  // Explicit only, canonical order
  MinfResult symbolic;               // Symbolic only
};

enum class CovEmptyMode { SymbolicAll, RestrictFragment, Materialize };

CoverResult cov(const PatternSetup& s, const Bitset& objects,
                CovEmptyMode mode = CovEmptyMode::SymbolicAll);

// Maximal common descriptions plus the flag telling whether they dominate
// every common description.
MinfResult cov_star(const PatternSetup& s, const Bitset& objects);

bool is_support_closed(const PatternSetup& s, const Description& d);

// Union of cov_star over every object subset.
std::vector<Description> support_closed_set(const PatternSetup& s,
                                            Exec ex = default_exec(),
                                            std::size_t max_objects = 20);

struct ExtentFamily {
  std::vector<Bitset> extents;                     // canonical order
  std::vector<std::optional<Description>> witness;  // parallel to extents

  bool contains(const Bitset& s) const { return family_contains(extents, s); }
};

ExtentFamily definable_extents(const PatternSetup& s, Exec ex = default_exec());

// Minimal definable supersets of the given object set; empty result means
// no definable set encloses it.
std::vector<Bitset> upper_approximations(const PatternSetup& s,
                                         const Bitset& objects);

bool pattern_implies(const PatternSetup& s, const Description& c,
                     const Description& d);
bool object_implies(const PatternSetup& s, const Bitset& a, const Bitset& b);

struct ImplicationReport {
  struct EquivalenceClass {
    Bitset extent;
    std::vector<Description> descriptions;  // canonical order
  };
  std::vector<EquivalenceClass> classes;  // by canonical extent order
};

// Groups the candidate descriptions into extent-equivalence classes.
ImplicationReport implications(const PatternSetup& s);

// The same extents re-expressed over the explicit poset of definable sets
// ordered by reverse inclusion; element ids are set renderings.
PatternSetup minimal_representation(const PatternSetup& s,
                                    Exec ex = default_exec());

// Whether a family of object sets arises as the definable sets of some
// setup: for every object, the intersection of the members containing it
// (the full set when there are none) must itself be a member.
bool is_extent_system(std::size_t object_count,
                      const std::vector<Bitset>& family);

struct SweepReport {
  bool verdict = true;
  std::optional<Bitset> witness;  // canonically first failing subset
  std::vector<Bitset> failures;   // canonical order
  std::uint64_t checked = 0;
};

// Checks that every object subset has all its maximal common
// descriptions, i.e. that cov(A) is exactly the downset of cov_star(A).
SweepReport is_multistructure(const PatternSetup& s, Exec ex = default_exec(),
                              std::size_t max_objects = 20);

// The description witnessing an empty extent, when one exists.
std::optional<Description> empty_extent_witness(const PatternSetup& s);

}  // namespace ordpat
