#include <doctest.h>

#include <sstream>

#include "ordpat/dot_io.hpp"
#include "ordpat/errors.hpp"
#include "ordpat/fixtures.hpp"
#include "ordpat/json_io.hpp"
#include "test_util.hpp"

using namespace ordpat;

TEST_CASE("poset json round trip closes the relation") {
  Json j = Json::parse(R"({"elements":["a","b","c"],
                           "leq":[["a","b"],["b","c"]]})");
  Poset p = parse_poset(j);
  CHECK(p.leq(p.index_of("a"), p.index_of("c")));
  Json back = poset_to_json(p);
  // Serialized edges are the covering relation only.
  CHECK(back["leq"].size() == 2);
  Poset again = parse_poset(back);
  CHECK(again.ids() == p.ids());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = 0; k < p.size(); ++k)
      CHECK(p.leq(i, k) == again.leq(i, k));
}

TEST_CASE("every fixture round-trips through ingestion") {
  for (const auto& name : fixture_names()) {
    if (name == "EXP") continue;
    Json j = fixture_json(name);
    if (fixture_is_poset(name)) {
      Poset p = parse_poset(j);
      CHECK(parse_poset(poset_to_json(p)).ids() == p.ids());
      continue;
    }
    PatternSetup s = parse_dataset(j);
    Json back = dataset_to_json(s);
    PatternSetup again = parse_dataset(back);
    CHECK(again.objects() == s.objects());
    for (std::size_t g = 0; g < s.object_count(); ++g)
      CHECK(again.delta(g) == s.delta(g));
    CHECK(dataset_to_json(again) == back);
  }
  for (int n : {3, 4, 5}) {
    PatternSetup s = parse_dataset(fixture_json("EXP", n));
    CHECK(s.object_count() == static_cast<std::size_t>(n));
    CHECK(parse_dataset(dataset_to_json(s)).objects() == s.objects());
  }
  CHECK_THROWS_AS(fixture_json("NOPE"), Error);
  CHECK_THROWS_AS(fixture_json("EXP", 2), Error);
}

TEST_CASE("fixture deltas match the documented tables") {
  PatternSetup seq = testutil::fixture_setup("SEQ");
  CHECK(to_text(seq.delta(seq.object_index("g1"))) == "cab");
  CHECK(to_text(seq.delta(seq.object_index("g2"))) == "cbba");
  CHECK(to_text(seq.delta(seq.object_index("g3"))) == "a");
  CHECK(to_text(seq.delta(seq.object_index("g4"))) == "bbc");

  PatternSetup item = testutil::fixture_setup("ITEM");
  CHECK(to_text(item.delta(item.object_index("g1"))) == "{a,b,c}");
  CHECK(to_text(item.delta(item.object_index("g2"))) == "{a}");
  CHECK(to_text(item.delta(item.object_index("g4"))) == "{b,c}");

  PatternSetup exp = testutil::fixture_setup("EXP", 4);
  CHECK(to_text(exp.delta(exp.object_index("g2"))) == "{1,3,4}");
}

TEST_CASE("description literals parse per space") {
  PatternSetup num = testutil::fixture_setup("NUM");
  CHECK(to_text(parse_desc(num.space(), Json::parse(R"({"ge":3})"))) ==
        "value>=3");
  CHECK(to_text(parse_desc(num.space(), Json(5))) == "{5}");
  CHECK_THROWS_AS(parse_desc(num.space(), Json(4)), Error);  // off the grid

  PatternSetup iv = testutil::fixture_setup("INTERVAL");
  CHECK(to_text(parse_desc(iv.space(), Json::parse("[3,5]"))) == "[3,5]");

  PatternSetup omega = testutil::fixture_setup("OMEGA");
  CHECK(to_text(parse_desc(omega.space(), Json::parse(R"({"c":3})"))) ==
        "c(3)");
  CHECK_THROWS_AS(parse_desc(omega.space(), Json("q")), Error);

  // The synthetic top only parses on augmented spaces.
  PatternSetup seq = testutil::fixture_setup("SEQ");
  CHECK_THROWS_AS(parse_desc(seq.space(), Json("TOP")), Error);
  CHECK(parse_desc(seq.with_top().space(), Json("TOP")).is_top());
}

TEST_CASE("csv ingestion") {
  std::istringstream items("id,a,b,c\ng1,1,1,1\ng2,1,0,0\ng3,1,0,0\ng4,0,1,1\n");
  PatternSetup s = parse_csv(items, CsvKind::Auto);
  CHECK(s.space().kind_name() == "itemset");
  CHECK(to_text(s.delta(s.object_index("g4"))) == "{b,c}");

  std::istringstream nums("id,value\ng1,1\ng2,3\ng3,5\ng4,9\n");
  PatternSetup n = parse_csv(nums, CsvKind::Auto);
  CHECK(n.space().kind_name() == "rays");
  CHECK(to_text(n.delta(n.object_index("g2"))) == "{3}");

  std::istringstream nums2("id,value\ng1,1\ng2,3\n");
  PatternSetup iv = parse_csv(nums2, CsvKind::Intervals);
  CHECK(iv.space().kind_name() == "intervals");
  CHECK(to_text(iv.delta(iv.object_index("g2"))) == "[3,3]");

  std::istringstream bad("id\n");
  CHECK_THROWS_AS(parse_csv(bad, CsvKind::Auto), Error);
}

TEST_CASE("dot exports") {
  Poset p = testutil::abba_poset();
  std::string dot = poset_dot(p);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"ab\"") != std::string::npos);
  CHECK(dot.find("\"\" -> \"a\"") != std::string::npos);

  PatternSetup item = testutil::fixture_setup("ITEM");
  std::string cdot = concepts_dot(concept_lattice(item), item);
  CHECK(cdot.find("{g1,g4}\\n{b,c}") != std::string::npos);

  AntichainSetupCompletion c(testutil::fixture_setup("SEQ"), true);
  std::string ccdot =
      completion_concepts_dot(completion_concept_lattice(c), c.base());
  CHECK(ccdot.find("{g2,g4}\\n{bb, c}") != std::string::npos);
}

TEST_CASE("bad inputs raise parse errors") {
  CHECK_THROWS_AS(parse_poset(Json::parse(R"({"leq":[]})")), Error);
  CHECK_THROWS_AS(parse_dataset(Json::parse(R"({"objects":[]})")), Error);
  CHECK_THROWS_AS(
      parse_dataset(Json::parse(
          R"({"space":{"kind":"nope"},"objects":[]})")),
      Error);
  CHECK_THROWS_AS(parse_dataset(Json::parse(
                      R"({"space":{"kind":"words","alphabet":"ab"},
                          "objects":[{"id":"g1","desc":"zz"}]})")),
                  Error);
  // Duplicate object ids are rejected.
  CHECK_THROWS_AS(parse_dataset(Json::parse(
                      R"({"space":{"kind":"words","alphabet":"ab"},
                          "objects":[{"id":"g1","desc":"a"},
                                     {"id":"g1","desc":"b"}]})")),
                  Error);
}
