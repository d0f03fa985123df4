#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ordpat/completion.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/setup.hpp"
#include "ordpat/structure.hpp"

namespace ordpat {

using Json = nlohmann::ordered_json;

// {"elements":[id...], "leq":[[x,y]...]}; the relation need not be closed.
Poset parse_poset(const Json& j);
Json poset_to_json(const Poset& p);

// {"kind":"itemset","attributes":[...]} | {"kind":"words","alphabet":"abc"}
// | {"kind":"intervals"} | {"kind":"rays"} | {"kind":"explicit","poset":{}}
// | {"kind":"omega"}; optional "augment_top": true. Numeric spaces take
// their value grid from the dataset.
SpacePtr parse_space(const Json& j, const std::vector<double>& grid);
Json space_to_json(const Space& s);

Description parse_desc(const Space& s, const Json& j);
Json desc_to_json(const Space& s, const Description& d);

// {"space":{...}, "objects":[{"id":"g1","desc":...}...]}
PatternSetup parse_dataset(const Json& j);
Json dataset_to_json(const PatternSetup& s);

enum class CsvKind { Auto, Itemset, Rays, Intervals };

// One row per object. Binary attribute columns make an itemset dataset;
// a single value column makes a numeric one.
PatternSetup parse_csv(std::istream& in, CsvKind kind);

Json extent_json(const PatternSetup& s, const Bitset& objects);
Json extent_family_json(const PatternSetup& s, const std::vector<Bitset>& f);
Json classify_json(const ClassifyReport& r);
Json sweep_json(const PatternSetup& s, const SweepReport& r);
Json cover_json(const PatternSetup& s, const CoverResult& c);
Json minf_json(const Space& space, const MinfResult& m);
Json concepts_json(const ConceptLattice& lat, const PatternSetup& s);
Json completion_concepts_json(const CompletionConceptLattice& lat,
                              const PatternSetup& s);
Json completion_report_json(const PatternSetup& s, const CompletionReport& r);
Json iff_report_json(const PatternSetup& s, const IffReport& r);
Json dm_json(const DMResult& r);

}  // namespace ordpat
