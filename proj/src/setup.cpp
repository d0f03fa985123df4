#include "ordpat/setup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ordpat/errors.hpp"

namespace ordpat {

Antichain make_antichain(const Space& space,
                         std::vector<Description> members) {
  sort_canonical(members);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (i != j && space.leq(members[i], members[j]))
        raise(Errc::ParseError, "comparable members in antichain: " +
                                    to_text(members[i]) + " and " +
                                    to_text(members[j]));
  return Antichain{std::move(members)};
}

void sort_canonical(std::vector<Bitset>& family) {
  std::sort(family.begin(), family.end(), Bitset::canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool family_contains(const std::vector<Bitset>& sorted_family,
                     const Bitset& s) {
  return std::binary_search(sorted_family.begin(), sorted_family.end(), s,
                            Bitset::canonical_less);
}

std::vector<std::pair<std::size_t, std::size_t>> inclusion_hasse(
    const std::vector<Bitset>& family) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const Bitset& lo = family[i];
      const Bitset& hi = family[j];
      if (!lo.is_subset_of(hi) || lo == hi) continue;
      bool covering = true;
      for (std::size_t k = 0; k < family.size() && covering; ++k) {
        if (k == i || k == j) continue;
        const Bitset& mid = family[k];
        if (lo.is_subset_of(mid) && mid.is_subset_of(hi) && !(mid == lo) &&
            !(mid == hi))
          covering = false;
      }
      if (covering) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string set_text(const std::vector<std::string>& ids, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    // An empty id would make the singleton collide with the empty set.
    out += ids[i].empty() ? "\"\"" : ids[i];
    first = false;
  });
  return out + "}";
}

// ---------------------------------------------------------- PatternSetup

PatternSetup::PatternSetup(std::vector<std::string> objects, SpacePtr space,
                           std::vector<Description> delta)
    : space_(std::move(space)) {
  if (objects.empty()) raise(Errc::ParseError, "setup needs objects");
  if (objects.size() != delta.size())
    raise(Errc::ParseError, "delta must cover every object");
  std::vector<std::size_t> order(objects.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return objects[a] < objects[b];
  });
  for (std::size_t k : order) {
    if (!objects_.empty() && objects_.back() == objects[k])
      raise(Errc::ParseError, "duplicate object id: " + objects[k]);
    objects_.push_back(objects[k]);
    delta_.push_back(delta[k]);
  }
  for (const auto& d : delta_) space_->validate(d);

  if (space_->caps().principal_ideals_finite) {
    fragment_ = restrict_to_relevant(*space_, delta_);
    candidates_ = fragment_->descs;
  } else {
    candidates_ = space_->extent_representatives(delta_);
  }
  candidate_exts_.reserve(candidates_.size());
  for (const auto& d : candidates_) {
    Bitset e(objects_.size());
    for (std::size_t g = 0; g < objects_.size(); ++g)
      if (space_->leq(d, delta_[g])) e.set(g);
    candidate_exts_.push_back(std::move(e));
  }
}

std::size_t PatternSetup::object_index(const std::string& id) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), id);
  if (it == objects_.end() || *it != id)
    raise(Errc::UnknownElement, "unknown object: " + id);
  return static_cast<std::size_t>(it - objects_.begin());
}

Bitset PatternSetup::ext(const Description& d) const {
  space_->validate(d);
  Bitset e(objects_.size());
  for (std::size_t g = 0; g < objects_.size(); ++g)
    if (space_->leq(d, delta_[g])) e.set(g);
  return e;
}

const RelevantFragment& PatternSetup::fragment() const {
  if (!fragment_)
    raise(Errc::InfiniteIdeal,
          space_->kind_name() + " space has no finite relevant fragment");
  return *fragment_;
}

Bitset PatternSetup::object_subset(const std::vector<std::string>& ids) const {
  Bitset s(objects_.size());
  for (const auto& id : ids) s.set(object_index(id));
  return s;
}

std::vector<std::string> PatternSetup::object_ids(const Bitset& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(objects_[i]); });
  return out;
}

PatternSetup PatternSetup::with_top() const {
  return PatternSetup(objects_, space_->with_top(), delta_);
}

// -------------------------------------------------------------- cov, cov*

namespace {

std::vector<Description> deltas_of(const PatternSetup& s, const Bitset& a) {
  std::vector<Description> ds;
  a.for_each([&](std::size_t g) { ds.push_back(s.delta(g)); });
  return ds;
}

// Indices of candidate descriptions covering all of `a`.
std::vector<std::size_t> cover_candidates(const PatternSetup& s,
                                          const Bitset& a) {
  std::vector<std::size_t> out;
  const auto& exts = s.candidate_extents();
  for (std::size_t i = 0; i < exts.size(); ++i)
    if (a.is_subset_of(exts[i])) out.push_back(i);
  return out;
}

}  // namespace

CoverResult cov(const PatternSetup& s, const Bitset& objects,
                CovEmptyMode mode) {
  CoverResult out;
  if (objects.none()) {
    switch (mode) {
      case CovEmptyMode::SymbolicAll:
        out.kind = CoverResult::Kind::All;
        return out;
      case CovEmptyMode::RestrictFragment:
        out.kind = CoverResult::Kind::Explicit;
        out.members = s.fragment().descs;
        sort_canonical(out.members);
        return out;
      case CovEmptyMode::Materialize: {
        auto universe = s.space().finite_universe();
        if (!universe)
          raise(Errc::InfiniteIdeal,
                "cannot materialize every description of an infinite space");
        if (s.space().augmented()) universe->push_back(Description::top());
        out.kind = CoverResult::Kind::Explicit;
        out.members = std::move(*universe);
        sort_canonical(out.members);
        return out;
      }
    }
  }
  if (s.fragment_available()) {
    out.kind = CoverResult::Kind::Explicit;
    for (std::size_t i : cover_candidates(s, objects))
      out.members.push_back(s.candidates()[i]);
    sort_canonical(out.members);
    return out;
  }
  // Intensional space: explicit only when every chosen delta has a finite
  // ideal, symbolic (maximals plus domination flag) otherwise.
  auto ds = deltas_of(s, objects);
  bool finite = true;
  for (const auto& d : ds) {
    try {
      s.space().principal_ideal(d);
    } catch (const Error& e) {
      if (e.code() != Errc::InfiniteIdeal) throw;
      finite = false;
      break;
    }
  }
  if (finite) {
    out.kind = CoverResult::Kind::Explicit;
    auto ideal = s.space().principal_ideal(ds.front());
    for (const auto& c : ideal) {
      bool common = true;
      for (const auto& d : ds)
        if (!s.space().leq(c, d)) common = false;
      if (common) out.members.push_back(c);
    }
    sort_canonical(out.members);
    return out;
  }
  out.kind = CoverResult::Kind::Symbolic;
  out.symbolic = s.space().minf_of(ds);
  return out;
}

MinfResult cov_star(const PatternSetup& s, const Bitset& objects) {
  if (objects.none()) {
    GlobalMaximals g = s.space().global_maximals();
    if (!g.decidable)
      raise(Errc::UndefinedForSpace,
            "maximal descriptions of the space are undecidable");
    return MinfResult{g.maximals, g.covers_all};
  }
  if (!s.fragment_available()) return s.space().minf_of(deltas_of(s, objects));

  const auto& frag = s.fragment();
  auto cover = cover_candidates(s, objects);
  Bitset in_cover(frag.poset.size());
  for (std::size_t i : cover) in_cover.set(i);
  MinfResult out;
  out.all_present = true;  // finite covers are dominated by their maximals
  Bitset maximal = frag.poset.maximal(in_cover);
  maximal.for_each(
      [&](std::size_t i) { out.maximals.push_back(frag.descs[i]); });
  sort_canonical(out.maximals);
  return out;
}

bool is_support_closed(const PatternSetup& s, const Description& d) {
  s.space().validate(d);
  MinfResult star = cov_star(s, s.ext(d));
  for (const auto& m : star.maximals)
    if (m == d) return true;
  return false;
}

namespace {

Bitset mask_to_subset(std::size_t n, std::uint64_t mask) {
  Bitset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) s.set(i);
  return s;
}

void check_subset_cap(const PatternSetup& s, std::size_t max_objects) {
  if (s.object_count() > max_objects)
    raise(Errc::CapExceeded,
          "subset sweep over " + std::to_string(s.object_count()) +
              " objects exceeds the cap of " + std::to_string(max_objects));
}

}  // namespace

std::vector<Description> support_closed_set(const PatternSetup& s, Exec ex,
                                            std::size_t max_objects) {
  check_subset_cap(s, max_objects);
  const std::uint64_t total = std::uint64_t{1} << s.object_count();
  auto found = sweep_range(
      total, ex, [] { return std::vector<Description>{}; },
      [&](std::vector<Description>& acc, std::uint64_t mask) {
        MinfResult star = cov_star(s, mask_to_subset(s.object_count(), mask));
        acc.insert(acc.end(), star.maximals.begin(), star.maximals.end());
      },
      [](std::vector<Description>& into, std::vector<Description>& local) {
        into.insert(into.end(), local.begin(), local.end());
      });
  sort_canonical(found);
  return found;
}

// ------------------------------------------------------- definable extents

std::optional<Description> empty_extent_witness(const PatternSetup& s) {
  const Space& space = s.space();
  if (space.caps().empty_extent == EmptyExtentRule::Always) {
    // Words: a run of one letter longer than every delta is a substring
    // of nothing in the data.
    if (const auto* words = dynamic_cast<const WordSpace*>(&space)) {
      std::size_t longest = 0;
      for (const auto& d : s.deltas())
        longest = std::max(longest, d.get<WordDesc>().text.size());
      return Description::word(
          std::string(longest + 1, words->alphabet().front()));
    }
  }
  if (auto top = space.top_description()) {
    if (s.ext(*top).none()) return top;
    return std::nullopt;
  }
  if (space.caps().empty_extent == EmptyExtentRule::Never) return std::nullopt;
  if (auto universe = space.finite_universe()) {
    for (const auto& d : *universe)
      if (s.ext(d).none()) return d;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < s.candidates().size(); ++i)
    if (s.candidate_extents()[i].none()) return s.candidates()[i];
  return std::nullopt;
}

ExtentFamily definable_extents(const PatternSetup& s, Exec ex) {
  const auto& cands = s.candidates();
  const auto& exts = s.candidate_extents();
  using Entry = std::pair<Bitset, std::size_t>;  // extent, candidate index
  auto entries = sweep_range(
      static_cast<std::uint64_t>(cands.size()), ex,
      [] { return std::vector<Entry>{}; },
      [&](std::vector<Entry>& acc, std::uint64_t i) {
        acc.emplace_back(exts[i], static_cast<std::size_t>(i));
      },
      [](std::vector<Entry>& into, std::vector<Entry>& local) {
        into.insert(into.end(), local.begin(), local.end());
      });
  // Canonical extent order; witness is the canonically first description.
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (Bitset::canonical_less(a.first, b.first)) return true;
    if (Bitset::canonical_less(b.first, a.first)) return false;
    return canonical_less(cands[a.second], cands[b.second]);
  });
  ExtentFamily fam;
  for (const auto& [extent, ci] : entries) {
    if (!fam.extents.empty() && fam.extents.back() == extent) continue;
    fam.extents.push_back(extent);
    fam.witness.push_back(cands[ci]);
  }
  if (auto w = empty_extent_witness(s)) {
    Bitset empty = s.empty_objects();
    if (!fam.contains(empty)) {
      fam.extents.insert(fam.extents.begin(), empty);
      fam.witness.insert(fam.witness.begin(), *w);
    }
  }
  return fam;
}

std::vector<Bitset> upper_approximations(const PatternSetup& s,
                                         const Bitset& objects) {
  ExtentFamily fam = definable_extents(s);
  std::vector<Bitset> above;
  for (const auto& e : fam.extents)
    if (objects.is_subset_of(e)) above.push_back(e);
  std::vector<Bitset> minimal;
  for (const auto& e : above) {
    bool is_min = true;
    for (const auto& f : above)
      if (!(f == e) && f.is_subset_of(e)) is_min = false;
    if (is_min) minimal.push_back(e);
  }
  sort_canonical(minimal);
  return minimal;
}

// ------------------------------------------------------------ implications

bool pattern_implies(const PatternSetup& s, const Description& c,
                     const Description& d) {
  return s.ext(c).is_subset_of(s.ext(d));
}

bool object_implies(const PatternSetup& s, const Bitset& a, const Bitset& b) {
  // cov(a) within cov(b) is equivalent to b lying inside every definable
  // set that encloses a.
  Bitset inter = s.all_objects();
  for (const auto& e : definable_extents(s).extents)
    if (a.is_subset_of(e)) inter &= e;
  return b.is_subset_of(inter);
}

ImplicationReport implications(const PatternSetup& s) {
  std::map<std::vector<std::size_t>, std::vector<Description>> groups;
  const auto& cands = s.candidates();
  for (std::size_t i = 0; i < cands.size(); ++i)
    groups[s.candidate_extents()[i].indices()].push_back(cands[i]);
  ImplicationReport report;
  for (auto& [indices, descs] : groups) {
    Bitset extent(s.object_count());
    for (std::size_t g : indices) extent.set(g);
    sort_canonical(descs);
    report.classes.push_back({std::move(extent), std::move(descs)});
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const auto& a, const auto& b) {
              return Bitset::canonical_less(a.extent, b.extent);
            });
  return report;
}

// --------------------------------------------------- minimal representation

PatternSetup minimal_representation(const PatternSetup& s, Exec ex) {
  ExtentFamily fam = definable_extents(s, ex);
  std::vector<std::string> ids;
  for (const auto& e : fam.extents) ids.push_back(set_text(s.objects(), e));
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < fam.extents.size(); ++i)
    for (std::size_t j = 0; j < fam.extents.size(); ++j)
      if (i != j && fam.extents[j].is_subset_of(fam.extents[i]))
        rel.emplace_back(ids[i], ids[j]);  // reverse inclusion
  auto space = std::make_shared<ExplicitSpace>(Poset::from_relation(ids, rel));

  std::vector<Description> delta;
  for (std::size_t g = 0; g < s.object_count(); ++g) {
    Bitset inter = s.all_objects();
    for (const auto& e : fam.extents)
      if (e.test(g)) inter &= e;
    delta.push_back(Description::element(set_text(s.objects(), inter)));
  }
  PatternSetup rep(s.objects(), space, std::move(delta));

  ExtentFamily check = definable_extents(rep, ex);
  if (check.extents != fam.extents)
    throw std::logic_error("representation changed the definable sets");
  return rep;
}

bool is_extent_system(std::size_t object_count,
                      const std::vector<Bitset>& family) {
  std::vector<Bitset> sorted = family;
  sort_canonical(sorted);
  for (std::size_t g = 0; g < object_count; ++g) {
    Bitset inter = Bitset::full(object_count);
    for (const auto& e : sorted)
      if (e.test(g)) inter &= e;
    if (!family_contains(sorted, inter)) return false;
  }
  return true;
}

// ----------------------------------------------------------- multistructure

namespace {

// Does the object subset have all its maximal common descriptions?
bool subset_has_all_minf(const PatternSetup& s, const Bitset& a) {
  if (a.none()) {
    GlobalMaximals g = s.space().global_maximals();
    return g.decidable && g.covers_all;
  }
  if (!s.fragment_available())
    return s.space().minf_of(deltas_of(s, a)).all_present;
  const auto& frag = s.fragment();
  Bitset in_cover(frag.poset.size());
  for (std::size_t i : cover_candidates(s, a)) in_cover.set(i);
  Bitset maximal = frag.poset.maximal(in_cover);
  return frag.poset.down_closure(maximal) == frag.poset.down_closure(in_cover);
}

}  // namespace

SweepReport is_multistructure(const PatternSetup& s, Exec ex,
                              std::size_t max_objects) {
  check_subset_cap(s, max_objects);
  const std::size_t n = s.object_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  auto failures = sweep_range(
      total, ex, [] { return std::vector<Bitset>{}; },
      [&](std::vector<Bitset>& acc, std::uint64_t mask) {
        Bitset a = mask_to_subset(n, mask);
        if (!subset_has_all_minf(s, a)) acc.push_back(a);
      },
      [](std::vector<Bitset>& into, std::vector<Bitset>& local) {
        into.insert(into.end(), local.begin(), local.end());
      });
  sort_canonical(failures);
  SweepReport report;
  report.checked = total;
  report.failures = std::move(failures);
  report.verdict = report.failures.empty();
  if (!report.verdict) report.witness = report.failures.front();
  return report;
}

}  // namespace ordpat
