#include "ordpat/space.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordpat/errors.hpp"

namespace ordpat {

// ---------------------------------------------------------------- Space

bool Space::leq(const Description& c, const Description& d) const {
  if (d.is_top()) return true;
  if (c.is_top()) return false;
  return leq_impl(c, d);
}

std::vector<Description> Space::principal_ideal(const Description& d) const {
  validate(d);
  if (d.is_top()) {
    auto universe = finite_universe();
    if (!universe)
      raise(Errc::InfiniteIdeal, "ideal of TOP covers the whole space");
    universe->push_back(Description::top());
    sort_canonical(*universe);
    return *universe;
  }
  auto out = ideal_impl(d);
  sort_canonical(out);
  return out;
}

SpaceCaps Space::caps() const {
  SpaceCaps c = caps_impl();
  if (augmented_) {
    c.has_top = true;
    if (c.empty_extent == EmptyExtentRule::Never)
      c.empty_extent = EmptyExtentRule::PerSetup;
  }
  return c;
}

MinfResult Space::minf_pair(const Description& c, const Description& d) const {
  return minf_of({c, d});
}

MinfResult Space::minf_of(const std::vector<Description>& ds) const {
  if (!caps().supports_minf_oracle)
    raise(Errc::UnsupportedCapability,
          kind_name() + " space has no multi-infima oracle");
  std::vector<Description> plain;
  for (const auto& d : ds) {
    validate(d);
    if (!d.is_top()) plain.push_back(d);
  }
  if (plain.empty()) {
    GlobalMaximals g = global_maximals();
    if (!g.decidable)
      raise(Errc::UndefinedForSpace, "maximal descriptions undecidable");
    return MinfResult{g.maximals, g.covers_all};
  }
  return minf_impl(plain);
}

MinfResult Space::minf_impl(const std::vector<Description>& ds) const {
  // Generic finite route: intersect principal ideals, keep the maximal
  // elements. Finiteness makes the "all below a maximal" part automatic.
  std::vector<Description> bounds = principal_ideal(ds.front());
  for (std::size_t k = 1; k < ds.size(); ++k) {
    std::vector<Description> keep;
    for (const auto& c : bounds)
      if (leq(c, ds[k])) keep.push_back(c);
    bounds = std::move(keep);
  }
  MinfResult out;
  out.all_present = true;
  for (const auto& c : bounds) {
    bool is_max = true;
    for (const auto& other : bounds)
      if (!(other == c) && leq(c, other)) is_max = false;
    if (is_max) out.maximals.push_back(c);
  }
  sort_canonical(out.maximals);
  return out;
}

GlobalMaximals Space::global_maximals() const {
  if (augmented_) return GlobalMaximals{true, {Description::top()}, true};
  return global_impl();
}

std::optional<Description> Space::top_description() const {
  if (augmented_) return Description::top();
  GlobalMaximals g = global_impl();
  if (g.decidable && g.covers_all && g.maximals.size() == 1)
    return g.maximals.front();
  return std::nullopt;
}

void Space::validate(const Description& d) const {
  if (d.is_top()) {
    if (!augmented_)
      raise(Errc::SpaceMismatch, "TOP outside an augmented space");
    return;
  }
  validate_impl(d);
}

std::vector<Description> Space::extent_representatives(
    const std::vector<Description>& deltas) const {
  auto out = representatives_impl(deltas);
  sort_canonical(out);
  return out;
}

std::vector<Description> Space::representatives_impl(
    const std::vector<Description>& deltas) const {
  std::vector<Description> out;
  for (const auto& d : deltas) {
    auto ideal = principal_ideal(d);
    out.insert(out.end(), ideal.begin(), ideal.end());
  }
  return out;
}

std::shared_ptr<const Space> Space::with_top() const {
  std::shared_ptr<Space> copy = clone();
  copy->augmented_ = true;
  return copy;
}

// --------------------------------------------------------- ItemsetSpace

ItemsetSpace::ItemsetSpace(std::vector<std::string> attributes)
    : attributes_(std::move(attributes)) {
  std::sort(attributes_.begin(), attributes_.end());
  attributes_.erase(std::unique(attributes_.begin(), attributes_.end()),
                    attributes_.end());
}

bool ItemsetSpace::leq_impl(const Description& c, const Description& d) const {
  const auto& a = c.get<ItemsetDesc>().items;
  const auto& b = d.get<ItemsetDesc>().items;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Description> ItemsetSpace::ideal_impl(const Description& d) const {
  const auto& items = d.get<ItemsetDesc>().items;
  if (items.size() > 20)
    raise(Errc::CapExceeded, "itemset too wide to enumerate subsets");
  std::vector<Description> out;
  const std::uint64_t total = std::uint64_t{1} << items.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::string> sub;
    for (std::size_t i = 0; i < items.size(); ++i)
      if ((mask >> i) & 1) sub.push_back(items[i]);
    out.push_back(Description::itemset(std::move(sub)));
  }
  return out;
}

void ItemsetSpace::validate_impl(const Description& d) const {
  const auto* s = d.get_if<ItemsetDesc>();
  if (!s) raise(Errc::SpaceMismatch, "expected an itemset description");
  for (const auto& item : s->items)
    if (!std::binary_search(attributes_.begin(), attributes_.end(), item))
      raise(Errc::SpaceMismatch, "unknown attribute: " + item);
}

GlobalMaximals ItemsetSpace::global_impl() const {
  return GlobalMaximals{true, {Description::itemset(attributes_)}, true};
}

SpaceCaps ItemsetSpace::caps_impl() const {
  return SpaceCaps{true, true, true, EmptyExtentRule::PerSetup};
}

MinfResult ItemsetSpace::minf_impl(
    const std::vector<Description>& ds) const {
  std::vector<std::string> meet = ds.front().get<ItemsetDesc>().items;
  for (std::size_t k = 1; k < ds.size(); ++k) {
    const auto& other = ds[k].get<ItemsetDesc>().items;
    std::vector<std::string> next;
    std::set_intersection(meet.begin(), meet.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    meet = std::move(next);
  }
  return MinfResult{{Description::itemset(std::move(meet))}, true};
}

std::optional<std::vector<Description>> ItemsetSpace::finite_universe() const {
  if (attributes_.size() > 16) return std::nullopt;
  std::vector<Description> out;
  const std::uint64_t total = std::uint64_t{1} << attributes_.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::string> sub;
    for (std::size_t i = 0; i < attributes_.size(); ++i)
      if ((mask >> i) & 1) sub.push_back(attributes_[i]);
    out.push_back(Description::itemset(std::move(sub)));
  }
  sort_canonical(out);
  return out;
}

// -------------------------------------------------------- IntervalSpace

namespace {

std::vector<double> normalize_grid(std::vector<double> grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

bool on_grid(const std::vector<double>& grid, double v) {
  return std::binary_search(grid.begin(), grid.end(), v);
}

}  // namespace

IntervalSpace::IntervalSpace(std::vector<double> grid)
    : grid_(normalize_grid(std::move(grid))) {}

bool IntervalSpace::leq_impl(const Description& c, const Description& d) const {
  const auto& a = c.get<IntervalDesc>();
  const auto& b = d.get<IntervalDesc>();
  return a.lo <= b.lo && b.hi <= a.hi;
}

std::vector<Description> IntervalSpace::ideal_impl(
    const Description& d) const {
  const auto& iv = d.get<IntervalDesc>();
  std::vector<Description> out;
  for (double lo : grid_) {
    if (lo > iv.lo) break;
    for (double hi : grid_)
      if (hi >= iv.hi) out.push_back(Description::interval(lo, hi));
  }
  return out;
}

void IntervalSpace::validate_impl(const Description& d) const {
  const auto* iv = d.get_if<IntervalDesc>();
  if (!iv) raise(Errc::SpaceMismatch, "expected an interval description");
  if (!(iv->lo <= iv->hi))
    raise(Errc::SpaceMismatch, "interval bounds out of order");
  if (!on_grid(grid_, iv->lo) || !on_grid(grid_, iv->hi))
    raise(Errc::SpaceMismatch, "interval endpoint off the value grid");
}

GlobalMaximals IntervalSpace::global_impl() const {
  GlobalMaximals g{true, {}, true};
  for (double v : grid_) g.maximals.push_back(Description::interval(v, v));
  return g;
}

SpaceCaps IntervalSpace::caps_impl() const {
  return SpaceCaps{grid_.size() == 1, true, true, EmptyExtentRule::Never};
}

MinfResult IntervalSpace::minf_impl(const std::vector<Description>& ds) const {
  double lo = ds.front().get<IntervalDesc>().lo;
  double hi = ds.front().get<IntervalDesc>().hi;
  for (const auto& d : ds) {
    lo = std::min(lo, d.get<IntervalDesc>().lo);
    hi = std::max(hi, d.get<IntervalDesc>().hi);
  }
  return MinfResult{{Description::interval(lo, hi)}, true};
}

std::optional<std::vector<Description>> IntervalSpace::finite_universe()
    const {
  std::vector<Description> out;
  for (double lo : grid_)
    for (double hi : grid_)
      if (lo <= hi) out.push_back(Description::interval(lo, hi));
  return out;
}

// ------------------------------------------------------------- RaySpace

RaySpace::RaySpace(std::vector<double> grid)
    : grid_(normalize_grid(std::move(grid))) {}

bool RaySpace::leq_impl(const Description& c, const Description& d) const {
  const auto& a = c.get<RayDesc>();
  const auto& b = d.get<RayDesc>();
  using Shape = RayDesc::Shape;
  switch (a.shape) {
    case Shape::Le:
      return (b.shape == Shape::Le || b.shape == Shape::Point) &&
             b.value <= a.value;
    case Shape::Ge:
      return (b.shape == Shape::Ge || b.shape == Shape::Point) &&
             b.value >= a.value;
    case Shape::Point:
      return b.shape == Shape::Point && b.value == a.value;
  }
  return false;
}

std::vector<Description> RaySpace::ideal_impl(const Description& d) const {
  const auto& r = d.get<RayDesc>();
  std::vector<Description> out;
  using Shape = RayDesc::Shape;
  switch (r.shape) {
    case Shape::Point:
      out.push_back(d);
      for (double w : grid_) {
        if (w >= r.value) out.push_back(Description::ray_le(w));
        if (w <= r.value) out.push_back(Description::ray_ge(w));
      }
      break;
    case Shape::Le:
      for (double w : grid_)
        if (w >= r.value) out.push_back(Description::ray_le(w));
      break;
    case Shape::Ge:
      for (double w : grid_)
        if (w <= r.value) out.push_back(Description::ray_ge(w));
      break;
  }
  return out;
}

void RaySpace::validate_impl(const Description& d) const {
  const auto* r = d.get_if<RayDesc>();
  if (!r) raise(Errc::SpaceMismatch, "expected a ray description");
  if (!on_grid(grid_, r->value))
    raise(Errc::SpaceMismatch, "ray value off the value grid");
}

GlobalMaximals RaySpace::global_impl() const {
  GlobalMaximals g{true, {}, true};
  for (double v : grid_) g.maximals.push_back(Description::ray_point(v));
  return g;
}

SpaceCaps RaySpace::caps_impl() const {
  return SpaceCaps{grid_.size() == 1, true, true, EmptyExtentRule::Never};
}

std::optional<std::vector<Description>> RaySpace::finite_universe() const {
  std::vector<Description> out;
  for (double v : grid_) {
    out.push_back(Description::ray_le(v));
    out.push_back(Description::ray_point(v));
    out.push_back(Description::ray_ge(v));
  }
  return out;
}

// ------------------------------------------------------------ WordSpace

WordSpace::WordSpace(std::string alphabet) : alphabet_(std::move(alphabet)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                  alphabet_.end());
}

bool WordSpace::leq_impl(const Description& c, const Description& d) const {
  const auto& a = c.get<WordDesc>().text;
  const auto& b = d.get<WordDesc>().text;
  return b.find(a) != std::string::npos;
}

std::vector<Description> WordSpace::ideal_impl(const Description& d) const {
  const auto& w = d.get<WordDesc>().text;
  std::set<std::string> subs;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len)
      subs.insert(w.substr(i, len));
  std::vector<Description> out;
  for (const auto& s : subs) out.push_back(Description::word(s));
  return out;
}

void WordSpace::validate_impl(const Description& d) const {
  const auto* w = d.get_if<WordDesc>();
  if (!w) raise(Errc::SpaceMismatch, "expected a word description");
  if (w->text.empty()) raise(Errc::SpaceMismatch, "empty word");
  for (char ch : w->text)
    if (alphabet_.find(ch) == std::string::npos)
      raise(Errc::SpaceMismatch, std::string("letter outside alphabet: ") + ch);
}

GlobalMaximals WordSpace::global_impl() const {
  // Every word extends to a longer one, so nothing is maximal.
  return GlobalMaximals{true, {}, alphabet_.empty()};
}

SpaceCaps WordSpace::caps_impl() const {
  return SpaceCaps{false, true, true, EmptyExtentRule::Always};
}

// -------------------------------------------------------- ExplicitSpace

ExplicitSpace::ExplicitSpace(Poset poset) : poset_(std::move(poset)) {}

bool ExplicitSpace::leq_impl(const Description& c, const Description& d) const {
  return poset_.leq(poset_.index_of(c.get<ExplicitDesc>().id),
                    poset_.index_of(d.get<ExplicitDesc>().id));
}

std::vector<Description> ExplicitSpace::ideal_impl(
    const Description& d) const {
  std::vector<Description> out;
  for (const auto& id :
       poset_.ids_of(poset_.down(poset_.index_of(d.get<ExplicitDesc>().id))))
    out.push_back(Description::element(id));
  return out;
}

void ExplicitSpace::validate_impl(const Description& d) const {
  const auto* e = d.get_if<ExplicitDesc>();
  if (!e) raise(Errc::SpaceMismatch, "expected a poset element description");
  if (!poset_.contains(e->id))
    raise(Errc::SpaceMismatch, "unknown poset element: " + e->id);
}

GlobalMaximals ExplicitSpace::global_impl() const {
  Bitset max = poset_.maximal(poset_.full_subset());
  GlobalMaximals g{true, {}, false};
  for (const auto& id : poset_.ids_of(max))
    g.maximals.push_back(Description::element(id));
  g.covers_all = poset_.down_closure(max) == poset_.full_subset();
  return g;
}

SpaceCaps ExplicitSpace::caps_impl() const {
  return SpaceCaps{poset_.top().has_value(), true, true,
                   EmptyExtentRule::PerSetup};
}

MinfResult ExplicitSpace::minf_impl(const std::vector<Description>& ds) const {
  Bitset s(poset_.size());
  for (const auto& d : ds) s.set(poset_.index_of(d.get<ExplicitDesc>().id));
  MultiBounds mb = poset_.multi_infima(s);
  MinfResult out;
  out.all_present = mb.has_all;
  for (const auto& id : poset_.ids_of(mb.members))
    out.maximals.push_back(Description::element(id));
  return out;
}

std::optional<std::vector<Description>> ExplicitSpace::finite_universe()
    const {
  std::vector<Description> out;
  for (const auto& id : poset_.ids()) out.push_back(Description::element(id));
  return out;
}

// ----------------------------------------------------------- OmegaSpace

bool OmegaSpace::leq_impl(const Description& c, const Description& d) const {
  const auto& a = c.get<OmegaDesc>();
  const auto& b = d.get<OmegaDesc>();
  using Tag = OmegaDesc::Tag;
  if (a.tag == Tag::Chain)
    return b.tag != Tag::Chain || a.index <= b.index;
  return a.tag == b.tag;
}

std::vector<Description> OmegaSpace::ideal_impl(const Description& d) const {
  const auto& o = d.get<OmegaDesc>();
  if (o.tag != OmegaDesc::Tag::Chain)
    raise(Errc::InfiniteIdeal,
          "ideal of " + to_text(d) + " contains the whole chain");
  std::vector<Description> out;
  for (long i = 0; i <= o.index; ++i)
    out.push_back(Description::omega_chain(i));
  return out;
}

void OmegaSpace::validate_impl(const Description& d) const {
  if (!d.get_if<OmegaDesc>())
    raise(Errc::SpaceMismatch, "expected an omega description");
}

GlobalMaximals OmegaSpace::global_impl() const {
  return GlobalMaximals{true,
                        {Description::omega_a(), Description::omega_b()},
                        true};
}

SpaceCaps OmegaSpace::caps_impl() const {
  return SpaceCaps{false, true, false, EmptyExtentRule::PerSetup};
}

MinfResult OmegaSpace::minf_impl(const std::vector<Description>& ds) const {
  bool has_a = false, has_b = false;
  std::optional<long> min_chain;
  for (const auto& d : ds) {
    const auto& o = d.get<OmegaDesc>();
    switch (o.tag) {
      case OmegaDesc::Tag::A: has_a = true; break;
      case OmegaDesc::Tag::B: has_b = true; break;
      case OmegaDesc::Tag::Chain:
        min_chain = min_chain ? std::min(*min_chain, o.index) : o.index;
        break;
    }
  }
  if (min_chain)
    return MinfResult{{Description::omega_chain(*min_chain)}, true};
  if (has_a && has_b) {
    // Common refinements form the infinite ascending chain: no maximal
    // element, and nothing above the (empty) set of maximals.
    return MinfResult{{}, false};
  }
  return MinfResult{{has_a ? Description::omega_a() : Description::omega_b()},
                    true};
}

std::vector<Description> OmegaSpace::representatives_impl(
    const std::vector<Description>& deltas) const {
  std::vector<Description> out{Description::omega_a(), Description::omega_b(),
                               Description::omega_chain(0)};
  for (const auto& d : deltas) {
    const auto& o = d.get<OmegaDesc>();
    if (o.tag == OmegaDesc::Tag::Chain) {
      out.push_back(Description::omega_chain(o.index));
      out.push_back(Description::omega_chain(o.index + 1));
    }
  }
  return out;
}

// ----------------------------------------------------- relevant fragment

namespace {

RelevantFragment build_fragment(const Space& space,
                                std::vector<Description> descs) {
  sort_canonical(descs);
  std::vector<std::string> ids;
  std::map<std::string, Description> by_text;
  for (const auto& d : descs) {
    std::string text = to_text(d);
    if (!by_text.emplace(text, d).second)
      raise(Errc::ParseError, "description text collision: " + text);
    ids.push_back(text);
  }
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < descs.size(); ++i)
    for (std::size_t j = 0; j < descs.size(); ++j)
      if (i != j && space.leq(descs[i], descs[j]))
        rel.emplace_back(to_text(descs[i]), to_text(descs[j]));
  RelevantFragment out{Poset::from_relation(ids, rel), {}};
  out.descs.reserve(out.poset.size());
  for (const auto& id : out.poset.ids()) out.descs.push_back(by_text.at(id));
  return out;
}

}  // namespace

RelevantFragment restrict_to_relevant(const Space& space,
                                      const std::vector<Description>& deltas) {
  std::vector<Description> all;
  for (const auto& d : deltas) {
    auto ideal = space.principal_ideal(d);
    all.insert(all.end(), ideal.begin(), ideal.end());
  }
  return build_fragment(space, std::move(all));
}

RelevantFragment restrict_to_relevant_with_top(
    const Space& space, const std::vector<Description>& deltas) {
  std::vector<Description> all;
  for (const auto& d : deltas) {
    auto ideal = space.principal_ideal(d);
    all.insert(all.end(), ideal.begin(), ideal.end());
  }
  all.push_back(Description::top());
  return build_fragment(space, std::move(all));
}

}  // namespace ordpat
