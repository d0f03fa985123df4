#pragma once

#include <string>
#include <variant>
#include <vector>

namespace ordpat {

// One description value, tagged by the space family it lives in.

struct ItemsetDesc {
  std::vector<std::string> items;  // sorted, unique
};

struct IntervalDesc {
  double lo = 0;
  double hi = 0;
};

// A one-sided or degenerate numeric region: (-inf, v], {v}, or [v, +inf).
struct RayDesc {
  enum class Shape { Le, Point, Ge };
  Shape shape = Shape::Point;
  double value = 0;
};

struct WordDesc {
  std::string text;  // nonempty
};

struct ExplicitDesc {
  std::string id;
};

// Element of the built-in infinite chain-with-two-tops poset:
// c(0) < c(1) < ... with two incomparable upper elements a and b.
struct OmegaDesc {
  enum class Tag { A, B, Chain };
  Tag tag = Tag::Chain;
  long index = 0;  // meaningful for Chain only
};

// The synthetic largest element added by top augmentation.
struct TopDesc {};

class Description {
 public:
  using Value = std::variant<ItemsetDesc, IntervalDesc, RayDesc, WordDesc,
                             ExplicitDesc, OmegaDesc, TopDesc>;

  Description() = default;
  Description(Value v) : v_(std::move(v)) {}

  static Description itemset(std::vector<std::string> items);
  static Description interval(double lo, double hi);
  static Description ray_point(double v) {
    return Description(RayDesc{RayDesc::Shape::Point, v});
  }
  static Description ray_le(double v) {
    return Description(RayDesc{RayDesc::Shape::Le, v});
  }
  static Description ray_ge(double v) {
    return Description(RayDesc{RayDesc::Shape::Ge, v});
  }
  static Description word(std::string w);
  static Description element(std::string id) {
    return Description(ExplicitDesc{std::move(id)});
  }
  static Description omega_a() { return Description(OmegaDesc{OmegaDesc::Tag::A, 0}); }
  static Description omega_b() { return Description(OmegaDesc{OmegaDesc::Tag::B, 0}); }
  static Description omega_chain(long i);
  static Description top() { return Description(TopDesc{}); }

  const Value& value() const { return v_; }
  bool is_top() const { return std::holds_alternative<TopDesc>(v_); }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }
  template <class T>
  const T& get() const {
    return std::get<T>(v_);
  }

 private:
  Value v_;
};

// Plain text rendering: "{a,b}", "[1,3]", "value>=3", "{3}", "cab",
// element ids verbatim, "a"/"b"/"c(3)", "TOP". Used for DOT labels,
// derived poset element ids, and canonical sorting tiebreaks.
std::string to_text(const Description& d);

// Minimal decimal rendering of grid values (integers print without a
// fractional part).
std::string format_number(double v);

bool operator==(const Description& a, const Description& b);
inline bool operator!=(const Description& a, const Description& b) {
  return !(a == b);
}

// Total order used for all canonical serializations; independent of the
// subsumption order. Itemsets sort by (size, items); everything else by a
// family-specific key. TOP sorts last.
bool canonical_less(const Description& a, const Description& b);

struct DescriptionLess {
  bool operator()(const Description& a, const Description& b) const {
    return canonical_less(a, b);
  }
};

void sort_canonical(std::vector<Description>& ds);

}  // namespace ordpat
