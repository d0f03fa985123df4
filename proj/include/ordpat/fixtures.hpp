#pragma once

#include <string>
#include <vector>

#include "ordpat/json_io.hpp"

namespace ordpat {

// Built-in datasets and posets used throughout the tests and docs:
//   SEQ      four words over {a,b,c} under the substring order
//   ITEM     four itemsets over {a,b,c}
//   NUM      four point values over the ray space
//   INTERVAL the same values over the interval space
//   OMEGA    two objects on the chain-with-two-tops space
//   EXP      n objects over the singleton/co-singleton poset (takes n)
//   ABBA     the poset of substrings of "ab" and "ba" (a poset, not a
//            dataset)
std::vector<std::string> fixture_names();

// EXP takes the parameter n (>= 3); the rest ignore it.
Json fixture_json(const std::string& name, int n = 4);

bool fixture_is_poset(const std::string& name);

}  // namespace ordpat
