// Command line front end: dataset ingestion, order/lattice analysis, and
// JSON/DOT emission. Exit codes: 0 success, 2 validation failure, 3 cap
// exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordpat/completion.hpp"
#include "ordpat/dot_io.hpp"
#include "ordpat/errors.hpp"
#include "ordpat/fixtures.hpp"
#include "ordpat/json_io.hpp"
#include "ordpat/setup.hpp"
#include "ordpat/structure.hpp"

namespace {

using ordpat::Json;

struct Options {
  std::string input;
  std::string output = "json";
  bool augment_top = false;
  bool serial = false;
  std::size_t max_objects = 20;
  std::size_t max_antichains = 1000000;
  std::string csv_space = "auto";
};

ordpat::Exec exec_of(const Options& o) {
  return o.serial ? ordpat::Exec::Serial : ordpat::default_exec();
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) ordpat::raise(ordpat::Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    ordpat::raise(ordpat::Errc::ParseError,
                  "invalid JSON in " + path + ": " + e.what());
  }
}

ordpat::CsvKind csv_kind(const std::string& name) {
  if (name == "auto") return ordpat::CsvKind::Auto;
  if (name == "itemset") return ordpat::CsvKind::Itemset;
  if (name == "rays") return ordpat::CsvKind::Rays;
  if (name == "intervals") return ordpat::CsvKind::Intervals;
  ordpat::raise(ordpat::Errc::ParseError, "unknown csv space: " + name);
}

ordpat::PatternSetup load_setup(const Options& o) {
  if (o.input.size() > 4 && o.input.substr(o.input.size() - 4) == ".csv") {
    std::ifstream in(o.input);
    if (!in) ordpat::raise(ordpat::Errc::ParseError, "cannot open " + o.input);
    return ordpat::parse_csv(in, csv_kind(o.csv_space));
  }
  ordpat::PatternSetup s = ordpat::parse_dataset(load_json(o.input));
  return o.augment_top ? s.with_top() : s;
}

ordpat::Bitset parse_object_list(const ordpat::PatternSetup& s,
                                 const std::string& csv) {
  std::vector<std::string> ids;
  std::stringstream ss(csv);
  std::string id;
  while (std::getline(ss, id, ','))
    if (!id.empty()) ids.push_back(id);
  return s.object_subset(ids);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------- commands

int cmd_classify_poset(const Options& o) {
  ordpat::Poset p = ordpat::parse_poset(load_json(o.input));
  if (o.output == "dot") {
    std::cout << ordpat::poset_dot(p);
    return 0;
  }
  emit(ordpat::classify_json(ordpat::classify(p, exec_of(o))));
  return 0;
}

int cmd_extents(const Options& o) {
  ordpat::PatternSetup s = load_setup(o);
  ordpat::ExtentFamily fam = ordpat::definable_extents(s, exec_of(o));
  Json j;
  j["count"] = fam.extents.size();
  Json list = Json::array();
  for (std::size_t i = 0; i < fam.extents.size(); ++i) {
    Json one;
    one["extent"] = ordpat::extent_json(s, fam.extents[i]);
    one["witness"] = fam.witness[i]
                         ? ordpat::desc_to_json(s.space(), *fam.witness[i])
                         : Json();
    list.push_back(std::move(one));
  }
  j["extents"] = std::move(list);
  emit(j);
  return 0;
}

int cmd_upper_approx(const Options& o, const std::string& set_csv) {
  ordpat::PatternSetup s = load_setup(o);
  ordpat::Bitset a = parse_object_list(s, set_csv);
  Json j;
  j["set"] = ordpat::extent_json(s, a);
  j["upper_approximations"] =
      ordpat::extent_family_json(s, ordpat::upper_approximations(s, a));
  emit(j);
  return 0;
}

int cmd_support_closed(const Options& o, const std::string& describe) {
  ordpat::PatternSetup s = load_setup(o);
  if (!describe.empty()) {
    ordpat::Description d =
        ordpat::parse_desc(s.space(), Json::parse(describe, nullptr, true));
    Json j;
    j["description"] = ordpat::desc_to_json(s.space(), d);
    j["support_closed"] = ordpat::is_support_closed(s, d);
    emit(j);
    return 0;
  }
  auto set = ordpat::support_closed_set(s, exec_of(o), o.max_objects);
  Json j;
  j["count"] = set.size();
  Json list = Json::array();
  for (const auto& d : set) list.push_back(ordpat::desc_to_json(s.space(), d));
  j["support_closed"] = std::move(list);
  emit(j);
  return 0;
}

int cmd_implications(const Options& o, const std::string& premise,
                     const std::string& conclusion,
                     const std::string& premise_set,
                     const std::string& conclusion_set) {
  ordpat::PatternSetup s = load_setup(o);
  Json j;
  if (!premise.empty() || !conclusion.empty()) {
    ordpat::Description c = ordpat::parse_desc(s.space(), Json::parse(premise));
    ordpat::Description d =
        ordpat::parse_desc(s.space(), Json::parse(conclusion));
    j["pattern_implication"] = {
        {"premise", ordpat::desc_to_json(s.space(), c)},
        {"conclusion", ordpat::desc_to_json(s.space(), d)},
        {"holds", ordpat::pattern_implies(s, c, d)}};
  }
  if (!premise_set.empty() || !conclusion_set.empty()) {
    ordpat::Bitset a = parse_object_list(s, premise_set);
    ordpat::Bitset b = parse_object_list(s, conclusion_set);
    j["object_implication"] = {{"premise", ordpat::extent_json(s, a)},
                               {"conclusion", ordpat::extent_json(s, b)},
                               {"holds", ordpat::object_implies(s, a, b)}};
  }
  ordpat::ImplicationReport report = ordpat::implications(s);
  Json classes = Json::array();
  for (const auto& cls : report.classes) {
    Json one;
    one["extent"] = ordpat::extent_json(s, cls.extent);
    Json descs = Json::array();
    for (const auto& d : cls.descriptions)
      descs.push_back(ordpat::desc_to_json(s.space(), d));
    one["descriptions"] = std::move(descs);
    classes.push_back(std::move(one));
  }
  j["equivalence_classes"] = std::move(classes);
  emit(j);
  return 0;
}

int cmd_minimal_rep(const Options& o) {
  ordpat::PatternSetup s = load_setup(o);
  emit(ordpat::dataset_to_json(
      ordpat::minimal_representation(s, exec_of(o))));
  return 0;
}

int cmd_check_multistructure(const Options& o) {
  ordpat::PatternSetup s = load_setup(o);
  emit(ordpat::sweep_json(
      s, ordpat::is_multistructure(s, exec_of(o), o.max_objects)));
  return 0;
}

int cmd_check_structure(const Options& o) {
  ordpat::PatternSetup s = load_setup(o);
  emit(ordpat::sweep_json(
      s, ordpat::is_pattern_structure(s, exec_of(o), o.max_objects)));
  return 0;
}

int cmd_concepts(const Options& o, const std::string& complete) {
  ordpat::PatternSetup s = load_setup(o);
  if (complete.empty()) {
    ordpat::ConceptLattice lat =
        ordpat::concept_lattice(s, exec_of(o), o.max_objects);
    if (o.output == "dot")
      std::cout << ordpat::concepts_dot(lat, s);
    else
      emit(ordpat::concepts_json(lat, s));
    return 0;
  }
  if (complete == "antichain") {
    ordpat::AntichainSetupCompletion c(s, o.augment_top, o.max_antichains,
                                       exec_of(o));
    ordpat::CompletionConceptLattice lat =
        ordpat::completion_concept_lattice(c, exec_of(o), o.max_objects);
    if (o.output == "dot")
      std::cout << ordpat::completion_concepts_dot(lat, c.base());
    else
      emit(ordpat::completion_concepts_json(lat, c.base()));
    return 0;
  }
  if (complete == "direct") {
    ordpat::PatternSetup base = o.augment_top ? s.with_top() : s;
    ordpat::DirectSetupCompletion c = ordpat::direct_completion(base);
    Json j;
    Json concepts = Json::array();
    for (const auto& e : c.extents()) {
      Json one;
      one["extent"] = ordpat::extent_json(base, e);
      one["intent"] = ordpat::cover_json(base, c.intent_of(e));
      concepts.push_back(std::move(one));
    }
    j["concepts"] = std::move(concepts);
    emit(j);
    return 0;
  }
  ordpat::raise(ordpat::Errc::ParseError,
                "completion kind must be antichain or direct");
}

int cmd_complete(const Options& o, const std::string& kind) {
  bool is_csv =
      o.input.size() > 4 && o.input.substr(o.input.size() - 4) == ".csv";
  Json input = is_csv ? Json() : load_json(o.input);
  // A bare poset completes to its poset of antichains.
  if (!is_csv && input.is_object() && input.contains("elements")) {
    ordpat::Poset p = ordpat::parse_poset(input);
    ordpat::AntichainPoset ac =
        ordpat::antichain_completion(p, o.max_antichains, exec_of(o));
    if (o.output == "dot") {
      std::cout << ordpat::poset_dot(ac.order, "antichains");
      return 0;
    }
    Json j;
    j["antichain_count"] = ac.antichains.size();
    j["order"] = ordpat::poset_to_json(ac.order);
    j["embedding_ok"] = ac.embedding_ok;
    j["is_lattice"] = ordpat::classify(ac.order, exec_of(o)).is_lattice;
    emit(j);
    return 0;
  }
  ordpat::PatternSetup s =
      is_csv ? load_setup(o) : ordpat::parse_dataset(input);
  ordpat::CompletionKind k = kind == "direct"
                                 ? ordpat::CompletionKind::Direct
                                 : ordpat::CompletionKind::Antichain;
  if (kind != "direct" && kind != "antichain")
    ordpat::raise(ordpat::Errc::ParseError,
                  "completion kind must be antichain or direct");
  ordpat::CompletionReport r =
      ordpat::completion_report(s, k, o.augment_top, exec_of(o), o.max_objects,
                                o.max_antichains);
  emit(ordpat::completion_report_json(o.augment_top ? s.with_top() : s, r));
  return 0;
}

int cmd_check_iff(const Options& o) {
  ordpat::PatternSetup s = load_setup(o);
  ordpat::IffReport r = ordpat::completion_iff_theorem(
      s, o.augment_top, exec_of(o), o.max_objects, o.max_antichains);
  emit(ordpat::iff_report_json(o.augment_top ? s.with_top() : s, r));
  return 0;
}

int cmd_dm(const Options& o) {
  ordpat::Poset p = ordpat::parse_poset(load_json(o.input));
  ordpat::DMResult r = ordpat::dedekind_macneille(p, o.max_antichains);
  if (o.output == "dot") {
    std::cout << ordpat::poset_dot(r.lattice, "dm");
    return 0;
  }
  emit(ordpat::dm_json(r));
  return 0;
}

int cmd_stats(const Options& o) {
  ordpat::PatternSetup s = load_setup(o);
  ordpat::AntichainSetupCompletion c(s, o.augment_top, o.max_antichains,
                                     exec_of(o));
  Json j;
  j["base_extents"] =
      ordpat::definable_extents(c.base(), exec_of(o)).extents.size();
  j["completed_extents"] = c.extents().size();
  emit(j);
  return 0;
}

int cmd_fixtures(const std::string& name, int n, const std::string& out_path) {
  Json j = ordpat::fixture_json(name, n);
  if (out_path.empty()) {
    emit(j);
  } else {
    std::ofstream out(out_path);
    if (!out)
      ordpat::raise(ordpat::Errc::ParseError, "cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-theoretic pattern analysis over pluggable description "
               "spaces"};
  app.require_subcommand(1);

  Options o;
  std::string set_csv, describe, premise, conclusion, premise_set,
      conclusion_set, complete_kind, fixture_name, fixture_out;
  int fixture_n = 4;

  auto add_common = [&](CLI::App* cmd, bool takes_input = true) {
    if (takes_input)
      cmd->add_option("input", o.input, "input file, or - for stdin")
          ->required();
    cmd->add_option("--output", o.output, "json or dot");
    cmd->add_flag("--augment-top", o.augment_top,
                  "add a synthetic largest description");
    cmd->add_flag("--serial", o.serial, "disable the parallel kernels");
    cmd->add_option("--max-objects", o.max_objects,
                    "cap on objects for subset sweeps");
    cmd->add_option("--max-antichains", o.max_antichains,
                    "cap on enumerated antichains");
    cmd->add_option("--csv-space", o.csv_space,
                    "space for csv input: auto, itemset, rays, intervals");
  };

  add_common(app.add_subcommand("classify-poset",
                                "order-theoretic classification of a poset"));
  add_common(app.add_subcommand("extents", "definable object sets"));
  auto* upper = app.add_subcommand("upper-approx",
                                   "minimal definable supersets of a set");
  add_common(upper);
  upper->add_option("--set", set_csv, "comma-separated object ids")
      ->required();
  auto* sc = app.add_subcommand("support-closed",
                                "support-closed descriptions");
  add_common(sc);
  sc->add_option("--describe", describe,
                 "check a single description (JSON literal)");
  auto* impl = app.add_subcommand("implications",
                                  "extent-equivalence classes and implication "
                                  "queries");
  add_common(impl);
  impl->add_option("--premise", premise, "description JSON literal");
  impl->add_option("--conclusion", conclusion, "description JSON literal");
  impl->add_option("--premise-set", premise_set, "comma-separated object ids");
  impl->add_option("--conclusion-set", conclusion_set,
                   "comma-separated object ids");
  add_common(app.add_subcommand("minimal-rep",
                                "re-express the setup over its definable "
                                "sets"));
  add_common(app.add_subcommand("check-multistructure",
                                "do all object sets have all their maximal "
                                "common descriptions"));
  add_common(app.add_subcommand("check-structure",
                                "do all object sets have a greatest common "
                                "description"));
  auto* concepts = app.add_subcommand("concepts", "concept lattice");
  add_common(concepts);
  concepts->add_option("--complete", complete_kind,
                       "build the completion first: antichain or direct");
  auto* complete = app.add_subcommand("complete",
                                      "completion report for a setup");
  add_common(complete);
  std::string complete_of = "antichain";
  complete->add_option("--kind", complete_of, "antichain or direct");
  add_common(app.add_subcommand("check-iff",
                                "multistructure and completed-structure "
                                "verdicts side by side"));
  add_common(app.add_subcommand("dm", "cut completion of a poset"));
  add_common(app.add_subcommand("stats",
                                "definable-set counts before and after "
                                "completion"));
  auto* fixtures = app.add_subcommand("fixtures", "write a built-in dataset");
  fixtures->add_option("name", fixture_name, "fixture name")->required();
  fixtures->add_option("--n", fixture_n, "size parameter for EXP");
  fixtures->add_option("--out", fixture_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("classify-poset")) return cmd_classify_poset(o);
    if (app.got_subcommand("extents")) return cmd_extents(o);
    if (app.got_subcommand("upper-approx")) return cmd_upper_approx(o, set_csv);
    if (app.got_subcommand("support-closed"))
      return cmd_support_closed(o, describe);
    if (app.got_subcommand("implications"))
      return cmd_implications(o, premise, conclusion, premise_set,
                              conclusion_set);
    if (app.got_subcommand("minimal-rep")) return cmd_minimal_rep(o);
    if (app.got_subcommand("check-multistructure"))
      return cmd_check_multistructure(o);
    if (app.got_subcommand("check-structure")) return cmd_check_structure(o);
    if (app.got_subcommand("concepts")) return cmd_concepts(o, complete_kind);
    if (app.got_subcommand("complete")) return cmd_complete(o, complete_of);
    if (app.got_subcommand("check-iff")) return cmd_check_iff(o);
    if (app.got_subcommand("dm")) return cmd_dm(o);
    if (app.got_subcommand("stats")) return cmd_stats(o);
    if (app.got_subcommand("fixtures"))
      return cmd_fixtures(fixture_name, fixture_n, fixture_out);
  } catch (const ordpat::Error& e) {
    Json diag;
    diag["error"] = e.code_name();
    diag["message"] = e.what();
    std::cerr << diag.dump() << "\n";
    return e.code() == ordpat::Errc::CapExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    Json diag;
    diag["error"] = "Internal";
    diag["message"] = e.what();
    std::cerr << diag.dump() << "\n";
    return 2;
  }
  return 0;
}
