#pragma once

#include <string>

#include "ordpat/completion.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/structure.hpp"

namespace ordpat {

// Hasse diagram with edges drawn from lower to higher element.
std::string poset_dot(const Poset& p, const std::string& name = "poset");

std::string concepts_dot(const ConceptLattice& lat, const PatternSetup& s);
std::string completion_concepts_dot(const CompletionConceptLattice& lat,
                                    const PatternSetup& s);

}  // namespace ordpat
