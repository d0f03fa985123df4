#include <doctest.h>

#include "ordpat/errors.hpp"
#include "ordpat/space.hpp"
#include "test_util.hpp"

using namespace ordpat;

namespace {

// Order laws over a finite slice of a space.
void check_partial_order(const Space& s, const std::vector<Description>& u) {
  for (const auto& x : u) CHECK(s.leq(x, x));
  for (const auto& x : u)
    for (const auto& y : u) {
      if (s.leq(x, y) && s.leq(y, x)) CHECK(x == y);
      for (const auto& z : u)
        if (s.leq(x, y) && s.leq(y, z)) CHECK(s.leq(x, z));
    }
}

}  // namespace

TEST_CASE("word subsumption follows the substring relation") {
  WordSpace words("abc");
  CHECK(words.leq(Description::word("ca"), Description::word("cab")));
  CHECK_FALSE(words.leq(Description::word("cb"), Description::word("cab")));
  CHECK_THROWS_AS(words.validate(Description::word("xyz")), Error);
  CHECK_THROWS_AS(Description::word(""), Error);

  auto ideal = words.principal_ideal(Description::word("cab"));
  CHECK(testutil::texts(ideal) ==
        std::vector<std::string>{"a", "ab", "b", "c", "ca", "cab"});
}

TEST_CASE("itemset subsumption and ideals") {
  ItemsetSpace items({"a", "b", "c"});
  CHECK(items.leq(Description::itemset({"b"}), Description::itemset({"b", "c"})));
  CHECK_FALSE(
      items.leq(Description::itemset({"a"}), Description::itemset({"b", "c"})));
  auto ideal = items.principal_ideal(Description::itemset({"b", "c"}));
  CHECK(testutil::texts(ideal) ==
        std::vector<std::string>{"{}", "{b}", "{c}", "{b,c}"});
  CHECK(items.caps().has_top);
  CHECK(to_text(*items.top_description()) == "{a,b,c}");
}

TEST_CASE("ray subsumption is region containment") {
  RaySpace rays({1, 3, 5, 9});
  CHECK(rays.leq(Description::ray_ge(3), Description::ray_point(5)));
  CHECK_FALSE(rays.leq(Description::ray_ge(9), Description::ray_point(5)));
  CHECK(rays.leq(Description::ray_le(9), Description::ray_le(3)));
  CHECK_FALSE(rays.leq(Description::ray_le(3), Description::ray_ge(3)));

  MinfResult pair =
      rays.minf_pair(Description::ray_point(3), Description::ray_point(5));
  CHECK(testutil::texts(pair.maximals) ==
        std::vector<std::string>{"value<=5", "value>=3"});
  CHECK(pair.all_present);
}

TEST_CASE("interval meets are convex hulls") {
  IntervalSpace iv({1, 3, 5, 9});
  CHECK(iv.leq(Description::interval(1, 9), Description::interval(3, 5)));
  MinfResult m = iv.minf_of({Description::interval(3, 3),
                             Description::interval(5, 5),
                             Description::interval(1, 1)});
  REQUIRE(m.maximals.size() == 1);
  CHECK(to_text(m.maximals.front()) == "[1,5]");
  CHECK(m.all_present);

  // Any finite set has a single maximal common coarsening.
  auto universe = *iv.finite_universe();
  for (const auto& a : universe)
    for (const auto& b : universe) {
      MinfResult r = iv.minf_pair(a, b);
      CHECK(r.maximals.size() == 1);
      CHECK(r.all_present);
    }
}

TEST_CASE("subsumption is a partial order on every concrete space") {
  ItemsetSpace items({"a", "b", "c"});
  check_partial_order(items, *items.finite_universe());
  RaySpace rays({1, 3, 5, 9});
  check_partial_order(rays, *rays.finite_universe());
  IntervalSpace iv({1, 3, 5});
  check_partial_order(iv, *iv.finite_universe());
  WordSpace words("abc");
  check_partial_order(words, words.principal_ideal(Description::word("cbba")));
  OmegaSpace omega;
  check_partial_order(
      omega, {Description::omega_a(), Description::omega_b(),
              Description::omega_chain(0), Description::omega_chain(2),
              Description::omega_chain(5)});
}

TEST_CASE("omega space: chain ideals are finite, side ideals are not") {
  OmegaSpace omega;
  CHECK(testutil::texts(omega.principal_ideal(Description::omega_chain(3))) ==
        std::vector<std::string>{"c(0)", "c(1)", "c(2)", "c(3)"});
  CHECK_THROWS_AS(omega.principal_ideal(Description::omega_a()), Error);

  MinfResult ab = omega.minf_pair(Description::omega_a(),
                                  Description::omega_b());
  CHECK(ab.maximals.empty());
  CHECK_FALSE(ab.all_present);

  MinfResult ac = omega.minf_pair(Description::omega_a(),
                                  Description::omega_chain(4));
  CHECK(testutil::texts(ac.maximals) == std::vector<std::string>{"c(4)"});
  CHECK(ac.all_present);

  GlobalMaximals g = omega.global_maximals();
  CHECK(testutil::texts(g.maximals) == std::vector<std::string>{"a", "b"});
  CHECK(g.covers_all);
}

TEST_CASE("itemset pair oracle returns the lattice meet") {
  ItemsetSpace items({"a", "b", "c"});
  MinfResult m = items.minf_pair(Description::itemset({"a", "b"}),
                                 Description::itemset({"a", "c"}));
  CHECK(testutil::texts(m.maximals) == std::vector<std::string>{"{a}"});
  CHECK(m.all_present);
}

TEST_CASE("the relevant fragment of the four words") {
  WordSpace words("abc");
  std::vector<Description> deltas{
      Description::word("cab"), Description::word("cbba"),
      Description::word("a"), Description::word("bbc")};
  RelevantFragment frag = restrict_to_relevant(words, deltas);
  CHECK(frag.poset.size() == 14);
  CHECK(frag.poset.ids() ==
        std::vector<std::string>{"a", "ab", "b", "ba", "bb", "bba", "bbc",
                                 "bc", "c", "ca", "cab", "cb", "cbb", "cbba"});
  // The induced order agrees with subsumption pairwise.
  for (std::size_t i = 0; i < frag.poset.size(); ++i)
    for (std::size_t j = 0; j < frag.poset.size(); ++j)
      CHECK(frag.poset.leq(i, j) == words.leq(frag.descs[i], frag.descs[j]));
}

TEST_CASE("fragment of a single itemset is a chain to the empty set") {
  ItemsetSpace items({"a", "b"});
  RelevantFragment frag =
      restrict_to_relevant(items, {Description::itemset({"a"})});
  CHECK(frag.poset.ids() == std::vector<std::string>{"{a}", "{}"});
  CHECK(frag.poset.hasse_edges().size() == 1);
}

TEST_CASE("omega deltas cannot be restricted to a fragment") {
  OmegaSpace omega;
  CHECK_THROWS_AS(restrict_to_relevant(
                      omega, {Description::omega_a(), Description::omega_b()}),
                  Error);
}

TEST_CASE("top augmentation") {
  auto words = std::make_shared<WordSpace>("abc");
  SpacePtr with = words->with_top();
  CHECK(with->augmented());
  CHECK(with->caps().has_top);
  CHECK(with->leq(Description::word("a"), Description::top()));
  CHECK_FALSE(with->leq(Description::top(), Description::word("a")));
  CHECK(with->leq(Description::top(), Description::top()));
  // Plain space rejects the synthetic top.
  CHECK_THROWS_AS(words->validate(Description::top()), Error);
  // A second augmentation changes nothing.
  SpacePtr twice = with->with_top();
  CHECK(twice->augmented());
  CHECK(twice->global_maximals().maximals.size() == 1);

  GlobalMaximals g = with->global_maximals();
  CHECK(g.covers_all);
  CHECK(g.maximals.size() == 1);
  CHECK(g.maximals.front().is_top());
}

TEST_CASE("augmenting the itemset space keeps the fragment a lattice") {
  ItemsetSpace items({"a", "b", "c"});
  SpacePtr with = items.with_top();
  std::vector<Description> deltas{Description::itemset({"a", "b", "c"}),
                                  Description::itemset({"a"}),
                                  Description::itemset({"b", "c"})};
  RelevantFragment frag = restrict_to_relevant_with_top(*with, deltas);
  CHECK(frag.poset.contains("TOP"));
  ClassifyReport r = classify(frag.poset);
  CHECK(r.is_lattice);
  CHECK(r.is_complete_lattice);
}
