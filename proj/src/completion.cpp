#include "ordpat/completion.hpp"

#include <algorithm>
#include <map>

#include "ordpat/errors.hpp"

namespace ordpat {

std::vector<Bitset> intersection_closure(std::vector<Bitset> family,
                                         std::size_t universe,
                                         bool include_full) {
  if (include_full) family.push_back(Bitset::full(universe));
  sort_canonical(family);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Bitset> fresh;
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        Bitset inter = family[i] & family[j];
        if (!family_contains(family, inter)) fresh.push_back(inter);
      }
    if (!fresh.empty()) {
      grew = true;
      family.insert(family.end(), fresh.begin(), fresh.end());
      sort_canonical(family);
    }
  }
  return family;
}

// ------------------------------------------------- antichain enumeration

namespace {

// comparable[i]: everything ordered against i, i excluded.
std::vector<Bitset> comparability_rows(const Poset& p) {
  std::vector<Bitset> rows;
  rows.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Bitset r = p.up(i) | p.down(i);
    r.reset(i);
    rows.push_back(std::move(r));
  }
  return rows;
}

void count_antichains_from(const Poset& p, const std::vector<Bitset>& comp,
                           std::size_t start, const Bitset& chosen,
                           std::size_t cap, std::size_t& count) {
  for (std::size_t j = start; j < p.size(); ++j) {
    if (chosen.intersects(comp[j])) continue;
    if (++count > cap)
      raise(Errc::CapExceeded, "antichain count exceeds the cap of " +
                                   std::to_string(cap));
    Bitset next = chosen;
    next.set(j);
    count_antichains_from(p, comp, j + 1, next, cap, count);
  }
}

void collect_antichains_from(const Poset& p, const std::vector<Bitset>& comp,
                             std::size_t start, const Bitset& chosen,
                             std::vector<Bitset>& out) {
  for (std::size_t j = start; j < p.size(); ++j) {
    if (chosen.intersects(comp[j])) continue;
    Bitset next = chosen;
    next.set(j);
    out.push_back(next);
    collect_antichains_from(p, comp, j + 1, next, out);
  }
}

}  // namespace

std::vector<Bitset> enumerate_antichains(const Poset& base,
                                         std::size_t max_antichains,
                                         Exec ex) {
  auto comp = comparability_rows(base);
  std::size_t count = 1;  // the empty antichain
  if (count > max_antichains)
    raise(Errc::CapExceeded, "antichain cap must allow the empty antichain");
  count_antichains_from(base, comp, 0, base.empty_subset(), max_antichains,
                        count);

  // Work is partitioned by the least member; each branch is independent.
  auto found = sweep_range(
      static_cast<std::uint64_t>(base.size()), ex,
      [] { return std::vector<Bitset>{}; },
      [&](std::vector<Bitset>& acc, std::uint64_t first) {
        Bitset chosen = base.empty_subset();
        chosen.set(static_cast<std::size_t>(first));
        acc.push_back(chosen);
        collect_antichains_from(base, comp,
                                static_cast<std::size_t>(first) + 1, chosen,
                                acc);
      },
      [](std::vector<Bitset>& into, std::vector<Bitset>& local) {
        into.insert(into.end(), local.begin(), local.end());
      });
  found.push_back(base.empty_subset());
  sort_canonical(found);
  return found;
}

AntichainPoset antichain_completion(const Poset& base,
                                    std::size_t max_antichains, Exec ex) {
  AntichainPoset out;
  out.base = base;
  std::vector<Bitset> found = enumerate_antichains(base, max_antichains, ex);

  const std::size_t k = found.size();
  std::vector<Bitset> downsets;
  downsets.reserve(k);
  for (const auto& a : found) downsets.push_back(base.down_closure(a));

  std::vector<std::string> ids;
  ids.reserve(k);
  for (const auto& a : found) ids.push_back(set_text(base.ids(), a));
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (downsets[i].is_subset_of(downsets[j])) rows[i].set(j);
  out.order = Poset::from_closure(ids, std::move(rows));

  // Realign the members with the order's id-sorted element indexing.
  out.antichains.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    out.antichains[out.order.index_of(ids[i])] = found[i];

  out.embedding.reserve(base.size());
  for (std::size_t a = 0; a < base.size(); ++a)
    out.embedding.push_back(
        out.order.index_of(set_text(base.ids(), Bitset::single(base.size(), a))));
  out.embedding_ok = verify_order_embedding(base, out.order, out.embedding);
  return out;
}

BoldiVignaReport check_boldi_vigna(const Poset& base,
                                   std::size_t max_antichains, Exec ex) {
  auto antichains = enumerate_antichains(base, max_antichains, ex);
  std::vector<Bitset> downsets;
  for (const auto& a : antichains) downsets.push_back(base.down_closure(a));

  using Pair = std::pair<std::size_t, std::size_t>;
  auto failures = sweep_range(
      static_cast<std::uint64_t>(antichains.size()), ex,
      [] { return std::vector<Pair>{}; },
      [&](std::vector<Pair>& acc, std::uint64_t i) {
        for (std::size_t j = i; j < antichains.size(); ++j) {
          Bitset inter = downsets[i] & downsets[j];
          Bitset candidate = base.maximal(inter);
          if (!(base.down_closure(candidate) == inter))
            acc.emplace_back(static_cast<std::size_t>(i), j);
        }
      },
      [](std::vector<Pair>& into, std::vector<Pair>& local) {
        into.insert(into.end(), local.begin(), local.end());
      });
  std::sort(failures.begin(), failures.end());
  BoldiVignaReport report;
  report.holds = failures.empty();
  if (!report.holds)
    report.witness = {antichains[failures.front().first],
                      antichains[failures.front().second]};
  return report;
}

MultilatticeLinkReport antichain_to_multilattice_check(
    const Poset& base, std::size_t max_antichains, Exec ex) {
  if (base.size() > 20)
    raise(Errc::CapExceeded, "subset sweep too large");
  MultilatticeLinkReport report;
  AntichainPoset ac = antichain_completion(base, max_antichains, ex);
  report.completion_is_lattice = classify(ac.order, ex).is_lattice;

  const std::uint64_t total = std::uint64_t{1} << base.size();
  bool all_minf = sweep_range(
      total, ex, [] { return true; },
      [&](bool& acc, std::uint64_t mask) {
        if (mask == 0 || !acc) return;
        Bitset s(base.size());
        for (std::size_t i = 0; i < base.size(); ++i)
          if ((mask >> i) & 1) s.set(i);
        if (!base.multi_infima(s).has_all) acc = false;
      },
      [](bool& into, bool local) { into = into && local; });
  report.base_is_meet_multisemilattice = all_minf;
  report.implication_holds =
      !report.completion_is_lattice || report.base_is_meet_multisemilattice;
  return report;
}

DMResult dedekind_macneille(const Poset& base, std::size_t max_cuts) {
  DMResult out;
  out.base = base;
  std::vector<Bitset> seed;
  for (std::size_t i = 0; i < base.size(); ++i) seed.push_back(base.down(i));
  out.cuts = intersection_closure(std::move(seed), base.size(), true);
  if (out.cuts.size() > max_cuts)
    raise(Errc::CapExceeded, "cut count exceeds the cap");

  std::vector<std::string> ids;
  for (const auto& c : out.cuts) ids.push_back(set_text(base.ids(), c));
  const std::size_t k = out.cuts.size();
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (out.cuts[i].is_subset_of(out.cuts[j])) rows[i].set(j);
  out.lattice = Poset::from_closure(ids, std::move(rows));

  for (std::size_t a = 0; a < base.size(); ++a)
    out.embedding.push_back(
        out.lattice.index_of(set_text(base.ids(), base.down(a))));
  out.embedding_ok = verify_order_embedding(base, out.lattice, out.embedding);

  out.base_is_lattice = classify(base).is_lattice;
  bool has_empty_cut =
      !out.cuts.empty() && out.cuts.front().none() && base.size() > 0;
  out.compared_with_synthetic_bottom = has_empty_cut;
  std::size_t expected = base.size() + (has_empty_cut ? 1 : 0);
  out.isomorphic_to_base =
      out.base_is_lattice && out.embedding_ok && out.cuts.size() == expected;
  return out;
}

// --------------------------------------------- setup antichain completion

AntichainSetupCompletion::AntichainSetupCompletion(const PatternSetup& base,
                                                   bool augment_top,
                                                   std::size_t max_antichains,
                                                   Exec ex)
    : base_(augment_top || base.space().augmented() ? base.with_top() : base),
      augmented_(augment_top || base.space().augmented()) {
  if (!base_.space().caps().principal_ideals_finite) return;
  fragment_ = augmented_
                  ? restrict_to_relevant_with_top(base_.space(), base_.deltas())
                  : restrict_to_relevant(base_.space(), base_.deltas());
  fragment_antichains_ =
      antichain_completion(fragment_->poset, max_antichains, ex);

  auto space = std::make_shared<ExplicitSpace>(fragment_antichains_->order);
  std::vector<Description> delta;
  for (std::size_t g = 0; g < base_.object_count(); ++g) {
    std::size_t in_fragment =
        fragment_->poset.index_of(to_text(base_.delta(g)));
    delta.push_back(Description::element(set_text(
        fragment_->poset.ids(),
        Bitset::single(fragment_->poset.size(), in_fragment))));
  }
  materialized_ = PatternSetup(base_.objects(), space, std::move(delta));
}

Bitset AntichainSetupCompletion::ext_of(const Antichain& a) const {
  Bitset out = base_.all_objects();
  for (const auto& d : a.members) out &= base_.ext(d);
  return out;
}

std::vector<Bitset> AntichainSetupCompletion::extents() const {
  return intersection_closure(definable_extents(base_).extents,
                              base_.object_count(), true);
}

MinfResult AntichainSetupCompletion::intent_of(const Bitset& objects) const {
  return cov_star(base_, objects);
}

namespace {

Bitset mask_to_subset(std::size_t n, std::uint64_t mask) {
  Bitset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) s.set(i);
  return s;
}

}  // namespace

SweepReport AntichainSetupCompletion::is_structure(Exec ex,
                                                   std::size_t max_objects)
    const {
  if (base_.object_count() > max_objects)
    raise(Errc::CapExceeded, "subset sweep too large");
  const std::size_t n = base_.object_count();
  const std::uint64_t total = std::uint64_t{1} << n;

  auto check_one = [&](const Bitset& a) -> bool {
    if (a.none()) {
      // The completed space has a maximum exactly when the base space has
      // a dominating set of maximal descriptions (one antichain).
      GlobalMaximals g = base_.space().global_maximals();
      return g.decidable && g.covers_all;
    }
    if (!fragment_) {
      std::vector<Description> ds;
      a.for_each([&](std::size_t g) { ds.push_back(base_.delta(g)); });
      return base_.space().minf_of(ds).all_present;
    }
    // Common descriptions of `a` inside the fragment; the completed
    // setup has a greatest common antichain iff some enumerated antichain
    // within that subposet dominates all of it.
    const Poset& fp = fragment_->poset;
    Bitset cover(fp.size());
    for (std::size_t i = 0; i < fragment_->descs.size(); ++i) {
      bool common = true;
      a.for_each([&](std::size_t g) {
        if (!base_.space().leq(fragment_->descs[i], base_.delta(g)))
          common = false;
      });
      if (common) cover.set(i);
    }
    for (const auto& candidate : fragment_antichains_->antichains)
      if (candidate.is_subset_of(cover) &&
          cover.is_subset_of(fp.down_closure(candidate)))
        return true;
    return false;
  };

  auto failures = sweep_range(
      total, ex, [] { return std::vector<Bitset>{}; },
      [&](std::vector<Bitset>& acc, std::uint64_t mask) {
        Bitset a = mask_to_subset(n, mask);
        if (!check_one(a)) acc.push_back(a);
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

CompletionConceptLattice completion_concept_lattice(
    const AntichainSetupCompletion& c, Exec ex, std::size_t max_objects) {
  SweepReport structure = c.is_structure(ex, max_objects);
  if (!structure.verdict)
    raise(Errc::NotAStructure,
          "completion is not a pattern structure; failing object set " +
              set_text(c.base().objects(), *structure.witness));
  CompletionConceptLattice lat;
  std::vector<Bitset> extents = c.extents();
  for (const auto& e : extents) {
    MinfResult intent = c.intent_of(e);
    lat.concepts.push_back(
        {e, make_antichain(c.base().space(), intent.maximals)});
  }
  lat.hasse = inclusion_hasse(extents);
  return lat;
}

// ------------------------------------------------------ direct completion

DirectSetupCompletion direct_completion(const PatternSetup& base) {
  return DirectSetupCompletion(base);
}

CoverResult DirectSetupCompletion::intent_of(const Bitset& objects) const {
  return cov(base_, objects);
}

Bitset DirectSetupCompletion::ext_of(
    const std::vector<Description>& downset) const {
  Bitset out = base_.all_objects();
  for (const auto& d : downset) out &= base_.ext(d);
  return out;
}

std::vector<Bitset> DirectSetupCompletion::extents() const {
  return intersection_closure(definable_extents(base_).extents,
                              base_.object_count(), true);
}

std::vector<Description> DirectSetupCompletion::delta_ideal(
    std::size_t g) const {
  return base_.space().principal_ideal(base_.delta(g));
}

bool DirectSetupCompletion::verify_structure(std::size_t max_objects) const {
  if (base_.object_count() > max_objects)
    raise(Errc::CapExceeded, "subset sweep too large");
  std::vector<Bitset> family = extents();
  const std::size_t n = base_.object_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Bitset a = mask_to_subset(n, mask);
    Bitset smallest = base_.all_objects();
    for (const auto& f : family)
      if (a.is_subset_of(f)) smallest &= f;
    Bitset direct(n);
    if (a.none()) {
      // The intent of no objects is the whole description set, realized
      // only by objects sitting at a global maximum.
      if (auto top = base_.space().top_description()) direct = base_.ext(*top);
    } else {
      CoverResult intent = cov(base_, a);
      if (intent.kind != CoverResult::Kind::Explicit) return false;
      direct = ext_of(intent.members);
    }
    if (!(direct == smallest)) return false;
  }
  return true;
}

// ----------------------------------------------------------------- reports

CompletionReport completion_report(const PatternSetup& s, CompletionKind kind,
                                   bool augment_top, Exec ex,
                                   std::size_t max_objects,
                                   std::size_t max_antichains) {
  CompletionReport report;
  PatternSetup base = augment_top ? s.with_top() : s;
  std::vector<Bitset> before = definable_extents(base, ex).extents;
  report.base_extent_count = before.size();
  std::vector<Bitset> after;
  if (kind == CompletionKind::Antichain) {
    AntichainSetupCompletion c(s, augment_top, max_antichains, ex);
    after = c.extents();
    report.is_structure_after = c.is_structure(ex, max_objects).verdict;
  } else {
    DirectSetupCompletion c = direct_completion(base);
    after = c.extents();
    report.is_structure_after =
        base.fragment_available() ? c.verify_structure(max_objects) : true;
  }
  report.completed_extent_count = after.size();
  sort_canonical(before);
  for (const auto& e : after)
    if (!family_contains(before, e)) report.new_extents.push_back(e);
  sort_canonical(report.new_extents);
  return report;
}

IffReport completion_iff_theorem(const PatternSetup& s, bool augment_top,
                                 Exec ex, std::size_t max_objects,
                                 std::size_t max_antichains) {
  IffReport report;
  PatternSetup base = augment_top ? s.with_top() : s;
  report.multistructure = is_multistructure(base, ex, max_objects);

  AntichainSetupCompletion completion(s, augment_top, max_antichains, ex);
  report.completion_structure = completion.is_structure(ex, max_objects);
  report.equivalent =
      report.multistructure.verdict == report.completion_structure.verdict;

  std::vector<Bitset> law =
      intersection_closure(definable_extents(base, ex).extents,
                           base.object_count(), true);
  std::vector<Bitset> completed = completion.extents();
  report.extents_law = law == completed;
  if (completion.materialized()) {
    std::vector<Bitset> via_setup =
        definable_extents(*completion.materialized(), ex).extents;
    // Antichains with a member outside the data-relevant fragment exist
    // whenever the base space has an empty-extent description, and they
    // only ever contribute the empty extent.
    Bitset no_objects = base.empty_objects();
    if (!family_contains(via_setup, no_objects) &&
        empty_extent_witness(base).has_value())
      via_setup.insert(via_setup.begin(), no_objects);
    report.extents_law = report.extents_law && via_setup == completed;
  }
  report.base_extents = definable_extents(base, ex).extents.size();
  report.completed_extents = completed.size();
  return report;
}

}  // namespace ordpat
