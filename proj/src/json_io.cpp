#include "ordpat/json_io.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "ordpat/errors.hpp"

namespace ordpat {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(Errc::ParseError, what); }

void expect_object(const Json& j, const std::string& what) {
  if (!j.is_object()) bad(what + " must be a JSON object");
}

std::string string_field(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_string())
    bad("missing string field \"" + key + "\"");
  return j.at(key).get<std::string>();
}

Json number_json(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15)
    return Json(static_cast<long long>(v));
  return Json(v);
}

}  // namespace

Poset parse_poset(const Json& j) {
  expect_object(j, "poset");
  if (!j.contains("elements") || !j.at("elements").is_array())
    bad("poset needs an \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) bad("element ids must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("leq")) {
    if (!j.at("leq").is_array()) bad("\"leq\" must be an array of pairs");
    for (const auto& pair : j.at("leq")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string())
        bad("\"leq\" entries must be [lower, upper] id pairs");
      rel.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return Poset::from_relation(std::move(elements), rel);
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.ids();
  Json edges = Json::array();
  for (const auto& [lo, hi] : p.hasse_edges())
    edges.push_back(Json::array({p.id(lo), p.id(hi)}));
  j["leq"] = std::move(edges);
  return j;
}

SpacePtr parse_space(const Json& j, const std::vector<double>& grid) {
  expect_object(j, "space");
  std::string kind = string_field(j, "kind");
  SpacePtr space;
  if (kind == "itemset") {
    if (!j.contains("attributes") || !j.at("attributes").is_array())
      bad("itemset space needs an \"attributes\" array");
    std::vector<std::string> attrs;
    for (const auto& a : j.at("attributes")) attrs.push_back(a.get<std::string>());
    space = std::make_shared<ItemsetSpace>(std::move(attrs));
  } else if (kind == "words") {
    space = std::make_shared<WordSpace>(string_field(j, "alphabet"));
  } else if (kind == "intervals") {
    space = std::make_shared<IntervalSpace>(grid);
  } else if (kind == "rays") {
    space = std::make_shared<RaySpace>(grid);
  } else if (kind == "explicit") {
    if (!j.contains("poset")) bad("explicit space needs a \"poset\"");
    space = std::make_shared<ExplicitSpace>(parse_poset(j.at("poset")));
  } else if (kind == "omega") {
    space = std::make_shared<OmegaSpace>();
  } else {
    bad("unknown space kind: " + kind);
  }
  if (j.value("augment_top", false)) space = space->with_top();
  return space;
}

Json space_to_json(const Space& s) {
  Json j;
  j["kind"] = s.kind_name();
  if (const auto* itemset = dynamic_cast<const ItemsetSpace*>(&s))
    j["attributes"] = itemset->attributes();
  else if (const auto* words = dynamic_cast<const WordSpace*>(&s))
    j["alphabet"] = words->alphabet();
  else if (const auto* expl = dynamic_cast<const ExplicitSpace*>(&s))
    j["poset"] = poset_to_json(expl->poset());
  if (s.augmented()) j["augment_top"] = true;
  return j;
}

Description parse_desc(const Space& s, const Json& j) {
  if (j.is_string() && j.get<std::string>() == "TOP" && s.augmented())
    return Description::top();
  Description d;
  const std::string kind = s.kind_name();
  if (kind == "itemset") {
    if (!j.is_array()) bad("itemset description must be an array");
    std::vector<std::string> items;
    for (const auto& it : j) items.push_back(it.get<std::string>());
    d = Description::itemset(std::move(items));
  } else if (kind == "words") {
    if (!j.is_string()) bad("word description must be a string");
    d = Description::word(j.get<std::string>());
  } else if (kind == "intervals") {
    if (j.is_number()) {
      double v = j.get<double>();
      d = Description::interval(v, v);
    } else if (j.is_array() && j.size() == 2) {
      d = Description::interval(j[0].get<double>(), j[1].get<double>());
    } else {
      bad("interval description must be a number or [lo, hi]");
    }
  } else if (kind == "rays") {
    if (j.is_number()) {
      d = Description::ray_point(j.get<double>());
    } else if (j.is_object() && j.contains("le")) {
      d = Description::ray_le(j.at("le").get<double>());
    } else if (j.is_object() && j.contains("ge")) {
      d = Description::ray_ge(j.at("ge").get<double>());
    } else if (j.is_object() && j.contains("eq")) {
      d = Description::ray_point(j.at("eq").get<double>());
    } else {
      bad("ray description must be a number or {\"le\"|\"ge\"|\"eq\": v}");
    }
  } else if (kind == "explicit") {
    if (!j.is_string()) bad("poset element description must be a string id");
    d = Description::element(j.get<std::string>());
  } else if (kind == "omega") {
    if (j.is_string() && j.get<std::string>() == "a") {
      d = Description::omega_a();
    } else if (j.is_string() && j.get<std::string>() == "b") {
      d = Description::omega_b();
    } else if (j.is_object() && j.contains("c")) {
      d = Description::omega_chain(j.at("c").get<long>());
    } else {
      bad("omega description must be \"a\", \"b\", or {\"c\": i}");
    }
  } else {
    bad("cannot parse descriptions for space kind: " + kind);
  }
  s.validate(d);
  return d;
}

Json desc_to_json(const Space& s, const Description& d) {
  (void)s;
  struct Visitor {
    Json operator()(const ItemsetDesc& v) const { return Json(v.items); }
    Json operator()(const IntervalDesc& v) const {
      if (v.lo == v.hi) return number_json(v.lo);
      return Json::array({number_json(v.lo), number_json(v.hi)});
    }
    Json operator()(const RayDesc& v) const {
      switch (v.shape) {
        case RayDesc::Shape::Point: return number_json(v.value);
        case RayDesc::Shape::Le: return Json{{"le", number_json(v.value)}};
        case RayDesc::Shape::Ge: return Json{{"ge", number_json(v.value)}};
      }
      return Json();
    }
    Json operator()(const WordDesc& v) const { return Json(v.text); }
    Json operator()(const ExplicitDesc& v) const { return Json(v.id); }
    Json operator()(const OmegaDesc& v) const {
      switch (v.tag) {
        case OmegaDesc::Tag::A: return Json("a");
        case OmegaDesc::Tag::B: return Json("b");
        case OmegaDesc::Tag::Chain: return Json{{"c", v.index}};
      }
      return Json();
    }
    Json operator()(const TopDesc&) const { return Json("TOP"); }
  };
  return std::visit(Visitor{}, d.value());
}

namespace {

// Endpoint values appearing in the raw numeric description literals.
std::vector<double> collect_grid(const Json& objects) {
  std::vector<double> grid;
  for (const auto& o : objects) {
    if (!o.contains("desc")) continue;
    const Json& d = o.at("desc");
    if (d.is_number()) {
      grid.push_back(d.get<double>());
    } else if (d.is_array()) {
      for (const auto& v : d)
        if (v.is_number()) grid.push_back(v.get<double>());
    } else if (d.is_object()) {
      for (const auto& key : {"le", "ge", "eq"})
        if (d.contains(key) && d.at(key).is_number())
          grid.push_back(d.at(key).get<double>());
    }
  }
  return grid;
}

}  // namespace

PatternSetup parse_dataset(const Json& j) {
  expect_object(j, "dataset");
  if (!j.contains("space")) bad("dataset needs a \"space\"");
  if (!j.contains("objects") || !j.at("objects").is_array())
    bad("dataset needs an \"objects\" array");
  SpacePtr space = parse_space(j.at("space"), collect_grid(j.at("objects")));
  std::vector<std::string> ids;
  std::vector<Description> delta;
  for (const auto& o : j.at("objects")) {
    expect_object(o, "object");
    ids.push_back(string_field(o, "id"));
    if (!o.contains("desc")) bad("object needs a \"desc\"");
    delta.push_back(parse_desc(*space, o.at("desc")));
  }
  return PatternSetup(std::move(ids), std::move(space), std::move(delta));
}

Json dataset_to_json(const PatternSetup& s) {
  Json j;
  j["space"] = space_to_json(s.space());
  Json objects = Json::array();
  for (std::size_t g = 0; g < s.object_count(); ++g) {
    Json o;
    o["id"] = s.objects()[g];
    o["desc"] = desc_to_json(s.space(), s.delta(g));
    objects.push_back(std::move(o));
  }
  j["objects"] = std::move(objects);
  return j;
}

PatternSetup parse_csv(std::istream& in, CsvKind kind) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  if (rows.size() < 2) bad("csv needs a header row and at least one object");
  const auto& header = rows.front();
  if (header.size() < 2) bad("csv needs an id column and a data column");

  if (kind == CsvKind::Auto) {
    bool binary = true;
    for (std::size_t r = 1; r < rows.size(); ++r)
      for (std::size_t c = 1; c < rows[r].size(); ++c)
        if (rows[r][c] != "0" && rows[r][c] != "1") binary = false;
    kind = binary ? CsvKind::Itemset : CsvKind::Rays;
  }

  std::vector<std::string> ids;
  if (kind == CsvKind::Itemset) {
    std::vector<std::string> attrs(header.begin() + 1, header.end());
    std::vector<Description> delta;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() != header.size()) bad("ragged csv row");
      ids.push_back(rows[r][0]);
      std::vector<std::string> items;
      for (std::size_t c = 1; c < rows[r].size(); ++c) {
        if (rows[r][c] == "1")
          items.push_back(header[c]);
        else if (rows[r][c] != "0")
          bad("itemset csv cells must be 0 or 1");
      }
      delta.push_back(Description::itemset(std::move(items)));
    }
    return PatternSetup(std::move(ids),
                        std::make_shared<ItemsetSpace>(std::move(attrs)),
                        std::move(delta));
  }

  if (header.size() != 2) bad("numeric csv needs exactly one value column");
  std::vector<double> values;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2) bad("ragged csv row");
    ids.push_back(rows[r][0]);
    try {
      values.push_back(std::stod(rows[r][1]));
    } catch (const std::exception&) {
      bad("bad numeric cell: " + rows[r][1]);
    }
  }
  SpacePtr space;
  std::vector<Description> delta;
  if (kind == CsvKind::Intervals) {
    space = std::make_shared<IntervalSpace>(values);
    for (double v : values) delta.push_back(Description::interval(v, v));
  } else {
    space = std::make_shared<RaySpace>(values);
    for (double v : values) delta.push_back(Description::ray_point(v));
  }
  return PatternSetup(std::move(ids), std::move(space), std::move(delta));
}

Json extent_json(const PatternSetup& s, const Bitset& objects) {
  return Json(s.object_ids(objects));
}

Json extent_family_json(const PatternSetup& s, const std::vector<Bitset>& f) {
  Json out = Json::array();
  for (const auto& e : f) out.push_back(extent_json(s, e));
  return out;
}

Json classify_json(const ClassifyReport& r) {
  Json j;
  j["is_chain"] = r.is_chain;
  j["is_antichain_poset"] = r.is_antichain_poset;
  j["has_top"] = r.has_top;
  j["has_bottom"] = r.has_bottom;
  j["is_meet_semilattice"] = r.is_meet_semilattice;
  j["is_join_semilattice"] = r.is_join_semilattice;
  j["is_lattice"] = r.is_lattice;
  j["is_complete_lattice"] = r.is_complete_lattice;
  j["is_benado_multilattice"] = r.is_benado_multilattice;
  j["is_multilattice"] = r.is_multilattice;
  j["multilattice_check"] =
      r.multilattice_exhaustive ? "exhaustive" : "sampled";
  return j;
}

Json sweep_json(const PatternSetup& s, const SweepReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["checked_subsets"] = r.checked;
  if (r.witness) j["witness"] = extent_json(s, *r.witness);
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(extent_json(s, f));
  j["failures"] = std::move(failures);
  return j;
}

Json cover_json(const PatternSetup& s, const CoverResult& c) {
  Json j;
  switch (c.kind) {
    case CoverResult::Kind::All:
      j["kind"] = "all";
      break;
    case CoverResult::Kind::Explicit: {
      j["kind"] = "explicit";
      Json members = Json::array();
      for (const auto& d : c.members)
        members.push_back(desc_to_json(s.space(), d));
      j["members"] = std::move(members);
      break;
    }
    case CoverResult::Kind::Symbolic:
      j["kind"] = "symbolic";
      j["maximals"] = minf_json(s.space(), c.symbolic)["maximals"];
      j["all_below_maximals"] = c.symbolic.all_present;
      break;
  }
  return j;
}

Json minf_json(const Space& space, const MinfResult& m) {
  Json j;
  Json maximals = Json::array();
  for (const auto& d : m.maximals) maximals.push_back(desc_to_json(space, d));
  j["maximals"] = std::move(maximals);
  j["all_below_maximals"] = m.all_present;
  return j;
}

Json concepts_json(const ConceptLattice& lat, const PatternSetup& s) {
  Json j;
  Json concepts = Json::array();
  for (const auto& c : lat.concepts) {
    Json one;
    one["extent"] = extent_json(s, c.extent);
    one["intent"] = desc_to_json(s.space(), c.intent);
    concepts.push_back(std::move(one));
  }
  j["concepts"] = std::move(concepts);
  Json hasse = Json::array();
  for (const auto& [lo, hi] : lat.hasse) hasse.push_back(Json::array({lo, hi}));
  j["hasse"] = std::move(hasse);
  return j;
}

Json completion_concepts_json(const CompletionConceptLattice& lat,
                              const PatternSetup& s) {
  Json j;
  Json concepts = Json::array();
  for (const auto& c : lat.concepts) {
    Json one;
    one["extent"] = extent_json(s, c.extent);
    Json intent = Json::array();
    for (const auto& d : c.intent.members)
      intent.push_back(desc_to_json(s.space(), d));
    one["intent"] = std::move(intent);
    concepts.push_back(std::move(one));
  }
  j["concepts"] = std::move(concepts);
  Json hasse = Json::array();
  for (const auto& [lo, hi] : lat.hasse) hasse.push_back(Json::array({lo, hi}));
  j["hasse"] = std::move(hasse);
  return j;
}

Json completion_report_json(const PatternSetup& s, const CompletionReport& r) {
  Json j;
  j["base_extents"] = r.base_extent_count;
  j["completed_extents"] = r.completed_extent_count;
  j["new_extents"] = extent_family_json(s, r.new_extents);
  j["is_structure_after"] = r.is_structure_after;
  return j;
}

Json iff_report_json(const PatternSetup& s, const IffReport& r) {
  Json j;
  j["is_multistructure"] = sweep_json(s, r.multistructure);
  j["completion_is_structure"] = sweep_json(s, r.completion_structure);
  j["equivalent"] = r.equivalent;
  j["extents_law"] = r.extents_law;
  j["base_extents"] = r.base_extents;
  j["completed_extents"] = r.completed_extents;
  return j;
}

Json dm_json(const DMResult& r) {
  Json j;
  j["cuts"] = Json::array();
  for (const auto& c : r.cuts) j["cuts"].push_back(r.base.ids_of(c));
  j["lattice"] = poset_to_json(r.lattice);
  j["embedding_ok"] = r.embedding_ok;
  j["base_is_lattice"] = r.base_is_lattice;
  j["isomorphic_to_base"] = r.isomorphic_to_base;
  j["compared_with_synthetic_bottom"] = r.compared_with_synthetic_bottom;
  return j;
}

}  // namespace ordpat
