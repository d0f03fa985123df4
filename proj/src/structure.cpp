#include "ordpat/structure.hpp"

#include <algorithm>

#include "ordpat/errors.hpp"

namespace ordpat {

namespace {

Bitset mask_to_subset(std::size_t n, std::uint64_t mask) {
  Bitset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) s.set(i);
  return s;
}

bool has_greatest_common(const PatternSetup& s, const Bitset& a) {
  MinfResult star = cov_star(s, a);
  return star.maximals.size() == 1 && star.all_present;
}

}  // namespace

SweepReport is_pattern_structure(const PatternSetup& s, Exec ex,
                                 std::size_t max_objects) {
  if (s.object_count() > max_objects)
    raise(Errc::CapExceeded,
          "subset sweep over " + std::to_string(s.object_count()) +
              " objects exceeds the cap of " + std::to_string(max_objects));
  const std::size_t n = s.object_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  auto failures = sweep_range(
      total, ex, [] { return std::vector<Bitset>{}; },
      [&](std::vector<Bitset>& acc, std::uint64_t mask) {
        Bitset a = mask_to_subset(n, mask);
        if (!has_greatest_common(s, a)) acc.push_back(a);
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

Description intent(const PatternSetup& s, const Bitset& objects) {
  MinfResult star = cov_star(s, objects);
  if (star.maximals.size() != 1 || !star.all_present)
    raise(Errc::NotAStructure,
          "no greatest common description for " +
              set_text(s.objects(), objects));
  return star.maximals.front();
}

ConceptLattice concept_lattice(const PatternSetup& s, Exec ex,
                               std::size_t max_objects) {
  SweepReport check = is_pattern_structure(s, ex, max_objects);
  if (!check.verdict)
    raise(Errc::NotAStructure,
          "not a pattern structure; failing object set " +
              set_text(s.objects(), *check.witness));

  std::vector<Bitset> extents = definable_extents(s, ex).extents;
  sort_canonical(extents);
  // Close under pairwise intersection to a fixpoint.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Bitset> fresh;
    for (std::size_t i = 0; i < extents.size(); ++i)
      for (std::size_t j = i + 1; j < extents.size(); ++j) {
        Bitset inter = extents[i] & extents[j];
        if (!family_contains(extents, inter)) fresh.push_back(inter);
      }
    if (!fresh.empty()) {
      grew = true;
      extents.insert(extents.end(), fresh.begin(), fresh.end());
      sort_canonical(extents);
    }
  }

  ConceptLattice lat;
  for (const auto& e : extents) lat.concepts.push_back({e, intent(s, e)});
  lat.hasse = inclusion_hasse(extents);
  return lat;
}

Bitset closure(const PatternSetup& s, const Bitset& objects) {
  return s.ext(intent(s, objects));
}

Poset extent_order_poset(const ConceptLattice& lat, const PatternSetup& s) {
  std::vector<std::string> ids;
  for (const auto& c : lat.concepts) ids.push_back(set_text(s.objects(), c.extent));
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < lat.concepts.size(); ++i)
    for (std::size_t j = 0; j < lat.concepts.size(); ++j)
      if (i != j && lat.leq(i, j)) rel.emplace_back(ids[i], ids[j]);
  return Poset::from_relation(ids, rel);
}

}  // namespace ordpat
