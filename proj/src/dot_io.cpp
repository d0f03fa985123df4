#include "ordpat/dot_io.hpp"

#include <sstream>

namespace ordpat {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string poset_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  out << "  rankdir=BT;\n  node [shape=none];\n";
  for (const auto& id : p.ids())
    out << "  " << quoted(id) << ";\n";
  for (const auto& [lo, hi] : p.hasse_edges())
    out << "  " << quoted(p.id(lo)) << " -> " << quoted(p.id(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

template <class IntentText>
std::string lattice_dot(const std::vector<Bitset>& extents,
                        const std::vector<std::pair<std::size_t, std::size_t>>&
                            hasse,
                        const PatternSetup& s, IntentText intent_text) {
  std::ostringstream out;
  out << "digraph \"concepts\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < extents.size(); ++i) {
    std::string label = set_text(s.objects(), extents[i]) + "\n" +
                        intent_text(i);
    out << "  n" << i << " [label=" << quoted(label) << "];\n";
  }
  for (const auto& [lo, hi] : hasse)
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string concepts_dot(const ConceptLattice& lat, const PatternSetup& s) {
  std::vector<Bitset> extents;
  for (const auto& c : lat.concepts) extents.push_back(c.extent);
  return lattice_dot(extents, lat.hasse, s, [&](std::size_t i) {
    return to_text(lat.concepts[i].intent);
  });
}

std::string completion_concepts_dot(const CompletionConceptLattice& lat,
                                    const PatternSetup& s) {
  std::vector<Bitset> extents;
  for (const auto& c : lat.concepts) extents.push_back(c.extent);
  return lattice_dot(extents, lat.hasse, s, [&](std::size_t i) {
    std::string text = "{";
    const auto& members = lat.concepts[i].intent.members;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) text += ", ";
      text += to_text(members[k]);
    }
    return text + "}";
  });
}

}  // namespace ordpat
