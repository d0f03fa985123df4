#include "ordpat/description.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "ordpat/errors.hpp"

namespace ordpat {

Description Description::itemset(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return Description(ItemsetDesc{std::move(items)});
}

Description Description::interval(double lo, double hi) {
  if (!(lo <= hi)) raise(Errc::ParseError, "interval bounds out of order");
  return Description(IntervalDesc{lo, hi});
}

Description Description::word(std::string w) {
  if (w.empty()) raise(Errc::ParseError, "words must be nonempty");
  return Description(WordDesc{std::move(w)});
}

Description Description::omega_chain(long i) {
  if (i < 0) raise(Errc::ParseError, "chain index must not be negative");
  return Description(OmegaDesc{OmegaDesc::Tag::Chain, i});
}

std::string format_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_text(const Description& d) {
  struct Visitor {
    std::string operator()(const ItemsetDesc& s) const {
      std::string out = "{";
      for (std::size_t i = 0; i < s.items.size(); ++i) {
        if (i) out += ",";
        out += s.items[i];
      }
      return out + "}";
    }
    std::string operator()(const IntervalDesc& iv) const {
      return "[" + format_number(iv.lo) + "," + format_number(iv.hi) + "]";
    }
    std::string operator()(const RayDesc& r) const {
      switch (r.shape) {
        case RayDesc::Shape::Le: return "value<=" + format_number(r.value);
        case RayDesc::Shape::Point: return "{" + format_number(r.value) + "}";
        case RayDesc::Shape::Ge: return "value>=" + format_number(r.value);
      }
      return {};
    }
    std::string operator()(const WordDesc& w) const { return w.text; }
    std::string operator()(const ExplicitDesc& e) const { return e.id; }
    std::string operator()(const OmegaDesc& o) const {
      switch (o.tag) {
        case OmegaDesc::Tag::A: return "a";
        case OmegaDesc::Tag::B: return "b";
        case OmegaDesc::Tag::Chain: return "c(" + std::to_string(o.index) + ")";
      }
      return {};
    }
    std::string operator()(const TopDesc&) const { return "TOP"; }
  };
  return std::visit(Visitor{}, d.value());
}

namespace {

int family_rank(const Description& d) {
  return static_cast<int>(d.value().index());
}

int ray_rank(RayDesc::Shape s) {
  switch (s) {
    case RayDesc::Shape::Le: return 0;
    case RayDesc::Shape::Point: return 1;
    case RayDesc::Shape::Ge: return 2;
  }
  return 3;
}

int omega_rank(OmegaDesc::Tag t) {
  switch (t) {
    case OmegaDesc::Tag::A: return 0;
    case OmegaDesc::Tag::B: return 1;
    case OmegaDesc::Tag::Chain: return 2;
  }
  return 3;
}

}  // namespace

bool operator==(const Description& a, const Description& b) {
  if (a.value().index() != b.value().index()) return false;
  struct Visitor {
    const Description& other;
    bool operator()(const ItemsetDesc& s) const {
      return s.items == other.get<ItemsetDesc>().items;
    }
    bool operator()(const IntervalDesc& iv) const {
      const auto& o = other.get<IntervalDesc>();
      return iv.lo == o.lo && iv.hi == o.hi;
    }
    bool operator()(const RayDesc& r) const {
      const auto& o = other.get<RayDesc>();
      return r.shape == o.shape && r.value == o.value;
    }
    bool operator()(const WordDesc& w) const {
      return w.text == other.get<WordDesc>().text;
    }
    bool operator()(const ExplicitDesc& e) const {
      return e.id == other.get<ExplicitDesc>().id;
    }
    bool operator()(const OmegaDesc& o) const {
      const auto& p = other.get<OmegaDesc>();
      return o.tag == p.tag &&
             (o.tag != OmegaDesc::Tag::Chain || o.index == p.index);
    }
    bool operator()(const TopDesc&) const { return true; }
  };
  return std::visit(Visitor{b}, a.value());
}

bool canonical_less(const Description& a, const Description& b) {
  // TOP last, then group by family.
  if (a.is_top() != b.is_top()) return b.is_top();
  if (family_rank(a) != family_rank(b)) return family_rank(a) < family_rank(b);
  struct Visitor {
    const Description& other;
    bool operator()(const ItemsetDesc& s) const {
      const auto& o = other.get<ItemsetDesc>().items;
      if (s.items.size() != o.size()) return s.items.size() < o.size();
      return s.items < o;
    }
    bool operator()(const IntervalDesc& iv) const {
      const auto& o = other.get<IntervalDesc>();
      return std::tuple(iv.lo, iv.hi) < std::tuple(o.lo, o.hi);
    }
    bool operator()(const RayDesc& r) const {
      const auto& o = other.get<RayDesc>();
      return std::tuple(ray_rank(r.shape), r.value) <
             std::tuple(ray_rank(o.shape), o.value);
    }
    bool operator()(const WordDesc& w) const {
      return w.text < other.get<WordDesc>().text;
    }
    bool operator()(const ExplicitDesc& e) const {
      return e.id < other.get<ExplicitDesc>().id;
    }
    bool operator()(const OmegaDesc& o) const {
      const auto& p = other.get<OmegaDesc>();
      return std::tuple(omega_rank(o.tag), o.index) <
             std::tuple(omega_rank(p.tag), p.index);
    }
    bool operator()(const TopDesc&) const { return false; }
  };
  return std::visit(Visitor{b}, a.value());
}

void sort_canonical(std::vector<Description>& ds) {
  std::sort(ds.begin(), ds.end(), DescriptionLess{});
  ds.erase(std::unique(ds.begin(), ds.end(),
                       [](const Description& x, const Description& y) {
                         return x == y;
                       }),
           ds.end());
}

}  // namespace ordpat
