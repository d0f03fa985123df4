#include "ordpat/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordpat/errors.hpp"

namespace ordpat {

Poset Poset::from_relation(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relation) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    raise(Errc::ParseError, "duplicate element id");

  Poset p;
  p.ids_ = std::move(elements);
  const std::size_t n = p.ids_.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[p.ids_[i]] = i;

  p.up_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
  for (const auto& [x, y] : relation) {
    auto ix = index.find(x);
    auto iy = index.find(y);
    if (ix == index.end()) raise(Errc::UnknownElement, "unknown element: " + x);
    if (iy == index.end()) raise(Errc::UnknownElement, "unknown element: " + y);
    p.up_[ix->second].set(iy->second);
  }

  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        raise(Errc::CycleDetected,
              "cycle through " + p.ids_[i] + " and " + p.ids_[j]);

  p.down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    p.up_[i].for_each([&](std::size_t j) { p.down_[j].set(i); });

  // Transitive reduction: (i, j) covers iff nothing sits strictly between.
  for (std::size_t i = 0; i < n; ++i) {
    p.up_[i].for_each([&](std::size_t j) {
      if (i == j) return;
      bool direct = true;
      p.up_[i].for_each([&](std::size_t k) {
        if (k != i && k != j && p.up_[k].test(j)) direct = false;
      });
      if (direct) p.hasse_.emplace_back(i, j);
    });
  }
  std::sort(p.hasse_.begin(), p.hasse_.end());
  return p;
}

Poset Poset::from_closure(std::vector<std::string> elements,
                          std::vector<Bitset> up_rows) {
  const std::size_t n = elements.size();
  if (up_rows.size() != n)
    raise(Errc::ParseError, "closure rows do not match the element list");
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return elements[a] < elements[b];
  });

  Poset p;
  std::vector<std::size_t> place(n);  // old index -> new index
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.ids_.empty() && p.ids_.back() == elements[order[i]])
      raise(Errc::ParseError, "duplicate element id");
    p.ids_.push_back(elements[order[i]]);
    place[order[i]] = i;
  }
  p.up_.assign(n, Bitset(n));
  for (std::size_t old = 0; old < n; ++old) {
    Bitset& row = p.up_[place[old]];
    up_rows[old].for_each([&](std::size_t j) { row.set(place[j]); });
    row.set(place[old]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        raise(Errc::CycleDetected,
              "cycle through " + p.ids_[i] + " and " + p.ids_[j]);

  p.down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    p.up_[i].for_each([&](std::size_t j) { p.down_[j].set(i); });
  for (std::size_t i = 0; i < n; ++i) {
    p.up_[i].for_each([&](std::size_t j) {
      if (i == j) return;
      bool direct = true;
      p.up_[i].for_each([&](std::size_t k) {
        if (k != i && k != j && p.up_[k].test(j)) direct = false;
      });
      if (direct) p.hasse_.emplace_back(i, j);
    });
  }
  std::sort(p.hasse_.begin(), p.hasse_.end());
  return p;
}

std::size_t Poset::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    raise(Errc::UnknownElement, "unknown element: " + id);
  return static_cast<std::size_t>(it - ids_.begin());
}

bool Poset::contains(const std::string& id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

Bitset Poset::subset_of(const std::vector<std::string>& members) const {
  Bitset s(size());
  for (const auto& id : members) s.set(index_of(id));
  return s;
}

std::vector<std::string> Poset::ids_of(const Bitset& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(ids_[i]); });
  return out;
}

Bitset Poset::down_closure(const Bitset& s) const {
  Bitset out(size());
  s.for_each([&](std::size_t i) { out |= down_[i]; });
  return out;
}

Bitset Poset::up_closure(const Bitset& s) const {
  Bitset out(size());
  s.for_each([&](std::size_t i) { out |= up_[i]; });
  return out;
}

Bitset Poset::lower_bounds(const Bitset& s) const {
  Bitset out = full_subset();
  s.for_each([&](std::size_t i) { out &= down_[i]; });
  return out;
}

Bitset Poset::upper_bounds(const Bitset& s) const {
  Bitset out = full_subset();
  s.for_each([&](std::size_t i) { out &= up_[i]; });
  return out;
}

Bitset Poset::minimal(const Bitset& s) const {
  Bitset out(size());
  s.for_each([&](std::size_t i) {
    Bitset below = down_[i];
    below &= s;
    below.reset(i);
    if (below.none()) out.set(i);
  });
  return out;
}

Bitset Poset::maximal(const Bitset& s) const {
  Bitset out(size());
  s.for_each([&](std::size_t i) {
    Bitset above = up_[i];
    above &= s;
    above.reset(i);
    if (above.none()) out.set(i);
  });
  return out;
}

bool Poset::is_antichain(const Bitset& s) const {
  bool ok = true;
  s.for_each([&](std::size_t i) {
    Bitset related = up_[i] | down_[i];
    related &= s;
    related.reset(i);
    if (related.any()) ok = false;
  });
  return ok;
}

bool Poset::is_chain(const Bitset& s) const {
  bool ok = true;
  s.for_each([&](std::size_t i) {
    Bitset related = up_[i] | down_[i];
    if (!s.is_subset_of(related)) ok = false;
  });
  return ok;
}

std::optional<std::size_t> Poset::maximum_of(const Bitset& s) const {
  std::optional<std::size_t> out;
  s.for_each([&](std::size_t i) {
    if (s.is_subset_of(down_[i])) out = i;
  });
  return out;
}

std::optional<std::size_t> Poset::minimum_of(const Bitset& s) const {
  std::optional<std::size_t> out;
  s.for_each([&](std::size_t i) {
    if (s.is_subset_of(up_[i])) out = i;
  });
  return out;
}

std::optional<std::size_t> Poset::meet(const Bitset& s) const {
  return maximum_of(lower_bounds(s));
}

std::optional<std::size_t> Poset::join(const Bitset& s) const {
  return minimum_of(upper_bounds(s));
}

MultiBounds Poset::multi_infima(const Bitset& s) const {
  Bitset lb = lower_bounds(s);
  MultiBounds out{maximal(lb), false};
  out.has_all = down_closure(out.members) == lb;
  return out;
}

MultiBounds Poset::multi_suprema(const Bitset& s) const {
  Bitset ub = upper_bounds(s);
  MultiBounds out{minimal(ub), false};
  out.has_all = up_closure(out.members) == ub;
  return out;
}

namespace {

Bitset subset_from_mask(std::size_t n, std::uint64_t mask) {
  Bitset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) s.set(i);
  return s;
}

bool has_all_multi_bounds(const Poset& p, const Bitset& s) {
  return p.multi_infima(s).has_all && p.multi_suprema(s).has_all;
}

}  // namespace

ClassifyReport classify(const Poset& p, Exec ex,
                        std::size_t exhaustive_limit) {
  ClassifyReport r;
  const std::size_t n = p.size();
  r.is_chain = p.is_chain(p.full_subset());
  r.is_antichain_poset = p.is_antichain(p.full_subset());
  r.has_top = p.top().has_value();
  r.has_bottom = p.bottom().has_value();

  r.is_meet_semilattice = true;
  r.is_join_semilattice = true;
  r.is_benado_multilattice = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Bitset pair(n);
      pair.set(i);
      pair.set(j);
      if (!p.meet(pair)) r.is_meet_semilattice = false;
      if (!p.join(pair)) r.is_join_semilattice = false;
      if (!has_all_multi_bounds(p, pair)) r.is_benado_multilattice = false;
    }
  }
  r.is_lattice = r.is_meet_semilattice && r.is_join_semilattice;
  r.is_complete_lattice = r.is_lattice && r.has_top && r.has_bottom;

  // Multilattice verdict by literal sweep over nonempty subsets.
  if (n <= exhaustive_limit) {
    const std::uint64_t total = std::uint64_t{1} << n;
    bool ok = sweep_range(
        total, ex, [] { return true; },
        [&](bool& acc, std::uint64_t mask) {
          if (mask == 0 || !acc) return;
          if (!has_all_multi_bounds(p, subset_from_mask(n, mask))) acc = false;
        },
        [](bool& into, bool local) { into = into && local; });
    r.is_multilattice = ok;
    r.multilattice_exhaustive = true;
  } else {
    bool ok = r.is_benado_multilattice;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        for (std::size_t k = j + 1; k < n && ok; ++k) {
          Bitset s(n);
          s.set(i);
          s.set(j);
          s.set(k);
          if (!has_all_multi_bounds(p, s)) ok = false;
        }
    r.is_multilattice = ok;
    r.multilattice_exhaustive = false;
  }
  return r;
}

bool verify_order_embedding(const Poset& src, const Poset& dst,
                            const std::vector<std::size_t>& map) {
  if (map.size() != src.size())
    raise(Errc::UnknownElement, "embedding map must be total");
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      if (src.leq(i, j) != dst.leq(map[i], map[j])) return false;
  return true;
}

bool downset_leq(const Poset& p, const Bitset& s, const Bitset& t) {
  return p.down_closure(s).is_subset_of(p.down_closure(t));
}

}  // namespace ordpat
