#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordpat/description.hpp"
#include "ordpat/poset.hpp"

namespace ordpat {

enum class EmptyExtentRule {
  Always,    // some description always has an empty extent
  Never,     // no description can have an empty extent
  PerSetup,  // decided by scanning against the concrete delta map
};

struct SpaceCaps {
  bool has_top = false;
  bool supports_minf_oracle = false;
  bool principal_ideals_finite = false;
  EmptyExtentRule empty_extent = EmptyExtentRule::PerSetup;
};

// Maximal common refinements of a description set, with a flag telling
// whether every common refinement lies below one of them.
struct MinfResult {
  std::vector<Description> maximals;  // canonically sorted antichain
  bool all_present = false;
};

// The maximal descriptions of the whole space.
struct GlobalMaximals {
  bool decidable = true;
  std::vector<Description> maximals;
  bool covers_all = false;  // every description lies below a maximal one
};

// A description space: a (possibly infinite) poset of descriptions
// exposed through capability-gated queries. Instances are immutable.
class Space {
 public:
  virtual ~Space() = default;

  virtual std::string kind_name() const = 0;
  bool augmented() const { return augmented_; }

  // c subsumes d: c is the less restrictive of the two.
  bool leq(const Description& c, const Description& d) const;

  // All descriptions below d. Throws InfiniteIdeal when that set cannot
  // be materialized.
  std::vector<Description> principal_ideal(const Description& d) const;

  SpaceCaps caps() const;

  // Maximal common refinements of {c, d}.
  MinfResult minf_pair(const Description& c, const Description& d) const;
  MinfResult minf_of(const std::vector<Description>& ds) const;

  GlobalMaximals global_maximals() const;

  // The single maximum description, when one exists (synthetic or not).
  std::optional<Description> top_description() const;

  // Membership and well-formedness; throws SpaceMismatch.
  void validate(const Description& d) const;

  // A finite set of descriptions whose extents exhaust the extents of the
  // whole space against the given delta map. For finite-ideal spaces this
  // is the union of the principal ideals of the deltas.
  std::vector<Description> extent_representatives(
      const std::vector<Description>& deltas) const;

  // Every description of the space, when that universe is finite and
  // small enough to list.
  virtual std::optional<std::vector<Description>> finite_universe() const {
    return std::nullopt;
  }

  // Copy of this space with a synthetic largest element added. Adding a
  // second one is a no-op.
  std::shared_ptr<const Space> with_top() const;

 protected:
  virtual bool leq_impl(const Description& c, const Description& d) const = 0;
  virtual std::vector<Description> ideal_impl(const Description& d) const = 0;
  virtual void validate_impl(const Description& d) const = 0;
  virtual GlobalMaximals global_impl() const = 0;
  virtual SpaceCaps caps_impl() const = 0;
  virtual MinfResult minf_impl(const std::vector<Description>& ds) const;
  virtual std::vector<Description> representatives_impl(
      const std::vector<Description>& deltas) const;
  virtual std::shared_ptr<Space> clone() const = 0;

  bool augmented_ = false;
};

using SpacePtr = std::shared_ptr<const Space>;

// Itemsets over a fixed attribute universe, ordered by inclusion.
class ItemsetSpace : public Space {
 public:
  explicit ItemsetSpace(std::vector<std::string> attributes);
  std::string kind_name() const override { return "itemset"; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  std::optional<std::vector<Description>> finite_universe() const override;

 protected:
  bool leq_impl(const Description&, const Description&) const override;
  std::vector<Description> ideal_impl(const Description&) const override;
  void validate_impl(const Description&) const override;
  GlobalMaximals global_impl() const override;
  SpaceCaps caps_impl() const override;
  MinfResult minf_impl(const std::vector<Description>&) const override;
  std::shared_ptr<Space> clone() const override {
    return std::make_shared<ItemsetSpace>(*this);
  }

 private:
  std::vector<std::string> attributes_;  // sorted, unique
};

// Closed intervals with endpoints on a finite value grid, ordered by
// reverse inclusion (wider intervals subsume narrower ones).
class IntervalSpace : public Space {
 public:
  explicit IntervalSpace(std::vector<double> grid);
  std::string kind_name() const override { return "intervals"; }
  const std::vector<double>& grid() const { return grid_; }
  std::optional<std::vector<Description>> finite_universe() const override;

 protected:
  bool leq_impl(const Description&, const Description&) const override;
  std::vector<Description> ideal_impl(const Description&) const override;
  void validate_impl(const Description&) const override;
  GlobalMaximals global_impl() const override;
  SpaceCaps caps_impl() const override;
  MinfResult minf_impl(const std::vector<Description>&) const override;
  std::shared_ptr<Space> clone() const override {
    return std::make_shared<IntervalSpace>(*this);
  }

 private:
  std::vector<double> grid_;  // sorted, unique
};

// Singletons and one-sided rays over a finite value grid, ordered by
// region containment.
class RaySpace : public Space {
 public:
  explicit RaySpace(std::vector<double> grid);
  std::string kind_name() const override { return "rays"; }
  const std::vector<double>& grid() const { return grid_; }
  std::optional<std::vector<Description>> finite_universe() const override;

 protected:
  bool leq_impl(const Description&, const Description&) const override;
  std::vector<Description> ideal_impl(const Description&) const override;
  void validate_impl(const Description&) const override;
  GlobalMaximals global_impl() const override;
  SpaceCaps caps_impl() const override;
  std::shared_ptr<Space> clone() const override {
    return std::make_shared<RaySpace>(*this);
  }

 private:
  std::vector<double> grid_;
};

// Nonempty words over a fixed alphabet, ordered by the contiguous
// substring relation. The space is infinite but every principal ideal is
// finite.
class WordSpace : public Space {
 public:
  explicit WordSpace(std::string alphabet);
  std::string kind_name() const override { return "words"; }
  const std::string& alphabet() const { return alphabet_; }

 protected:
  bool leq_impl(const Description&, const Description&) const override;
  std::vector<Description> ideal_impl(const Description&) const override;
  void validate_impl(const Description&) const override;
  GlobalMaximals global_impl() const override;
  SpaceCaps caps_impl() const override;
  std::shared_ptr<Space> clone() const override {
    return std::make_shared<WordSpace>(*this);
  }

 private:
  std::string alphabet_;
};

// A description space given directly as a finite poset.
class ExplicitSpace : public Space {
 public:
  explicit ExplicitSpace(Poset poset);
  std::string kind_name() const override { return "explicit"; }
  const Poset& poset() const { return poset_; }
  std::optional<std::vector<Description>> finite_universe() const override;

 protected:
  bool leq_impl(const Description&, const Description&) const override;
  std::vector<Description> ideal_impl(const Description&) const override;
  void validate_impl(const Description&) const override;
  GlobalMaximals global_impl() const override;
  SpaceCaps caps_impl() const override;
  MinfResult minf_impl(const std::vector<Description>&) const override;
  std::shared_ptr<Space> clone() const override {
    return std::make_shared<ExplicitSpace>(*this);
  }

 private:
  Poset poset_;
};

// The intensional infinite counterexample space: an ascending chain
// c(0) < c(1) < ... below two incomparable elements a and b. Principal
// ideals of a and b cannot be materialized; queries about common
// refinements go through the oracle.
class OmegaSpace : public Space {
 public:
  OmegaSpace() = default;
  std::string kind_name() const override { return "omega"; }

 protected:
  bool leq_impl(const Description&, const Description&) const override;
  std::vector<Description> ideal_impl(const Description&) const override;
  void validate_impl(const Description&) const override;
  GlobalMaximals global_impl() const override;
  SpaceCaps caps_impl() const override;
  MinfResult minf_impl(const std::vector<Description>& ds) const override;
  std::vector<Description> representatives_impl(
      const std::vector<Description>& deltas) const override;
  std::shared_ptr<Space> clone() const override {
    return std::make_shared<OmegaSpace>(*this);
  }
};

// The explicit finite poset induced on all descriptions below at least
// one delta. Element ids are the text renderings.
struct RelevantFragment {
  Poset poset;
  std::vector<Description> descs;  // by poset element index
};

RelevantFragment restrict_to_relevant(const Space& space,
                                      const std::vector<Description>& deltas);

// Same poset with the synthetic top appended (id "TOP").
RelevantFragment restrict_to_relevant_with_top(
    const Space& space, const std::vector<Description>& deltas);

}  // namespace ordpat
