#include "ordpat/fixtures.hpp"

#include <algorithm>

#include "ordpat/errors.hpp"

namespace ordpat {

std::vector<std::string> fixture_names() {
  return {"SEQ", "ITEM", "NUM", "INTERVAL", "OMEGA", "EXP", "ABBA"};
}

bool fixture_is_poset(const std::string& name) { return name == "ABBA"; }

namespace {

Json dataset(Json space, std::initializer_list<std::pair<const char*, Json>>
                             objects) {
  Json j;
  j["space"] = std::move(space);
  Json arr = Json::array();
  for (const auto& [id, desc] : objects) {
    Json o;
    o["id"] = id;
    o["desc"] = desc;
    arr.push_back(std::move(o));
  }
  j["objects"] = std::move(arr);
  return j;
}

Json exp_fixture(int n) {
  if (n < 3) raise(Errc::ParseError, "EXP needs n >= 3");
  // Description poset: singletons {i} below every co-singleton except
  // their own complement's.
  auto set_id = [](const std::vector<int>& members) {
    std::string id = "{";
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) id += ",";
      id += std::to_string(members[k]);
    }
    return id + "}";
  };
  std::vector<std::string> elements;
  std::vector<std::string> co(n + 1);
  for (int i = 1; i <= n; ++i) {
    elements.push_back(set_id({i}));
    std::vector<int> rest;
    for (int k = 1; k <= n; ++k)
      if (k != i) rest.push_back(k);
    co[i] = set_id(rest);
    elements.push_back(co[i]);
  }
  Json leq = Json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) leq.push_back(Json::array({set_id({i}), co[j]}));

  Json poset;
  poset["elements"] = elements;
  poset["leq"] = std::move(leq);
  Json space;
  space["kind"] = "explicit";
  space["poset"] = std::move(poset);

  Json j;
  j["space"] = std::move(space);
  Json objects = Json::array();
  for (int i = 1; i <= n; ++i) {
    Json o;
    o["id"] = "g" + std::to_string(i);
    o["desc"] = co[i];
    objects.push_back(std::move(o));
  }
  j["objects"] = std::move(objects);
  return j;
}

Json abba_fixture() {
  Json j;
  j["elements"] = Json::array({"", "a", "ab", "b", "ba"});
  j["leq"] = Json::array({
      Json::array({"", "a"}),
      Json::array({"", "b"}),
      Json::array({"a", "ab"}),
      Json::array({"a", "ba"}),
      Json::array({"b", "ab"}),
      Json::array({"b", "ba"}),
  });
  return j;
}

}  // namespace

Json fixture_json(const std::string& name, int n) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "SEQ")
    return dataset({{"kind", "words"}, {"alphabet", "abc"}},
                   {{"g1", "cab"}, {"g2", "cbba"}, {"g3", "a"}, {"g4", "bbc"}});
  if (upper == "ITEM")
    return dataset({{"kind", "itemset"},
                    {"attributes", Json::array({"a", "b", "c"})}},
                   {{"g1", Json::array({"a", "b", "c"})},
                    {"g2", Json::array({"a"})},
                    {"g3", Json::array({"a"})},
                    {"g4", Json::array({"b", "c"})}});
  if (upper == "NUM")
    return dataset({{"kind", "rays"}},
                   {{"g1", 1}, {"g2", 3}, {"g3", 5}, {"g4", 9}});
  if (upper == "INTERVAL")
    return dataset({{"kind", "intervals"}},
                   {{"g1", 1}, {"g2", 3}, {"g3", 5}, {"g4", 9}});
  if (upper == "OMEGA")
    return dataset({{"kind", "omega"}}, {{"g1", "a"}, {"g2", "b"}});
  if (upper == "EXP") return exp_fixture(n);
  if (upper == "ABBA") return abba_fixture();
  raise(Errc::UnknownFixture, "unknown fixture: " + name);
}

}  // namespace ordpat
