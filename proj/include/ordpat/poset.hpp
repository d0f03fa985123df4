#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordpat/bitset.hpp"
#include "ordpat/exec.hpp"

namespace ordpat {

struct MultiBounds {
  Bitset members;  // an antichain of element indices
  bool has_all;    // bounds set equals the closure of `members`
};

// Explicit finite partially ordered set. Elements are opaque string ids,
// stored sorted so that index order is id order. The full reflexive
// transitive closure is kept as dense bit rows in both directions, plus
// the covering relation derived by transitive reduction.
class Poset {
 public:
  // `relation` pairs mean first <= second; the reflexive transitive
  // closure is taken. Rejects duplicate ids, references to undeclared
  // elements, and cycles.
  static Poset from_relation(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& relation);

  // For callers that already hold the reflexive-transitive closure:
  // up_rows[i] is the upward row of elements[i], in the given order.
  // Antisymmetry is still checked.
  static Poset from_closure(std::vector<std::string> elements,
                            std::vector<Bitset> up_rows);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  std::size_t index_of(const std::string& id) const;  // throws UnknownElement
  bool contains(const std::string& id) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  const Bitset& up(std::size_t a) const { return up_[a]; }      // {b | a <= b}
  const Bitset& down(std::size_t a) const { return down_[a]; }  // {b | b <= a}

  // Covering pairs (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const {
    return hasse_;
  }

  Bitset empty_subset() const { return Bitset(size()); }
  Bitset full_subset() const { return Bitset::full(size()); }
  Bitset subset_of(const std::vector<std::string>& members) const;
  std::vector<std::string> ids_of(const Bitset& s) const;

  Bitset down_closure(const Bitset& s) const;
  Bitset up_closure(const Bitset& s) const;
  Bitset lower_bounds(const Bitset& s) const;  // lower_bounds({}) = everything
  Bitset upper_bounds(const Bitset& s) const;
  Bitset minimal(const Bitset& s) const;
  Bitset maximal(const Bitset& s) const;
  bool is_antichain(const Bitset& s) const;
  bool is_chain(const Bitset& s) const;

  // Maximum/minimum member of s, when one exists.
  std::optional<std::size_t> maximum_of(const Bitset& s) const;
  std::optional<std::size_t> minimum_of(const Bitset& s) const;

  std::optional<std::size_t> top() const { return maximum_of(full_subset()); }
  std::optional<std::size_t> bottom() const {
    return minimum_of(full_subset());
  }

  // meet({}) is the top when the poset is upper-bounded, otherwise absent.
  std::optional<std::size_t> meet(const Bitset& s) const;
  std::optional<std::size_t> join(const Bitset& s) const;

  MultiBounds multi_infima(const Bitset& s) const;
  MultiBounds multi_suprema(const Bitset& s) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

struct ClassifyReport {
  bool is_chain = false;
  bool is_antichain_poset = false;
  bool has_top = false;
  bool has_bottom = false;
  bool is_meet_semilattice = false;
  bool is_join_semilattice = false;
  bool is_lattice = false;
  bool is_complete_lattice = false;
  bool is_benado_multilattice = false;
  bool is_multilattice = false;
  // True when the multilattice verdict covered every nonempty subset;
  // false means only subsets of size <= 3 were swept.
  bool multilattice_exhaustive = true;
};

// `exhaustive_limit` caps the 2^n subset sweep behind the multilattice
// verdict; larger posets are downgraded to a size <= 3 sample.
ClassifyReport classify(const Poset& p, Exec ex = default_exec(),
                        std::size_t exhaustive_limit = 16);

// map[i] is the index in dst of the image of src element i.
bool verify_order_embedding(const Poset& src, const Poset& dst,
                            const std::vector<std::size_t>& map);

// The downset comparison lifted to arbitrary subsets: S <= T iff every
// member of S lies below some member of T. A partial order on antichains,
// only a preorder on arbitrary subsets.
bool downset_leq(const Poset& p, const Bitset& s, const Bitset& t);

}  // namespace ordpat
