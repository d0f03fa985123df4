#pragma once

#include <random>
#include <string>
#include <vector>

#include "ordpat/fixtures.hpp"
#include "ordpat/json_io.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/setup.hpp"

namespace testutil {

inline ordpat::Poset random_poset(std::size_t n, std::uint32_t seed,
                                  double density = 0.3) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i)
    ids.push_back("e" + std::to_string(i / 10) + std::to_string(i % 10));
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(ids[i], ids[j]);
  return ordpat::Poset::from_relation(ids, rel);
}

// Random setup: a random explicit description poset with each object
// mapped to a random element.
inline ordpat::PatternSetup random_setup(std::size_t poset_size,
                                         std::size_t objects,
                                         std::uint32_t seed,
                                         double density = 0.3) {
  ordpat::Poset p = random_poset(poset_size, seed, density);
  std::mt19937 rng(seed ^ 0x9e3779b9u);
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  std::vector<std::string> ids;
  std::vector<ordpat::Description> delta;
  for (std::size_t g = 0; g < objects; ++g) {
    ids.push_back("g" + std::to_string(g + 1));
    delta.push_back(ordpat::Description::element(p.id(pick(rng))));
  }
  return ordpat::PatternSetup(
      ids, std::make_shared<ordpat::ExplicitSpace>(std::move(p)), delta);
}

inline ordpat::Bitset subset_of_mask(std::size_t n, std::uint64_t mask) {
  ordpat::Bitset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) s.set(i);
  return s;
}

// The inclusion order on all subsets of {a, b, c}.
inline ordpat::Poset powerset_abc() {
  std::vector<std::string> atoms{"a", "b", "c"};
  std::vector<std::string> ids;
  auto name = [&](std::uint64_t mask) {
    std::string id = "{";
    bool first = true;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((mask >> i) & 1) {
        if (!first) id += ",";
        id += atoms[i];
        first = false;
      }
    return id + "}";
  };
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::uint64_t m = 0; m < 8; ++m) {
    ids.push_back(name(m));
    for (std::uint64_t t = 0; t < 8; ++t)
      if ((m & t) == m && m != t) rel.emplace_back(name(m), name(t));
  }
  return ordpat::Poset::from_relation(ids, rel);
}

inline ordpat::Poset abba_poset() {
  return ordpat::parse_poset(ordpat::fixture_json("ABBA"));
}

inline ordpat::PatternSetup fixture_setup(const std::string& name, int n = 4) {
  return ordpat::parse_dataset(ordpat::fixture_json(name, n));
}

inline std::vector<std::string> texts(
    const std::vector<ordpat::Description>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(ordpat::to_text(d));
  return out;
}

}  // namespace testutil
