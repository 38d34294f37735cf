#pragma once
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "arr/arrangement.hpp"
#include "arr/chambers.hpp"
#include "arr/polynomial.hpp"

namespace arr {

// Search bounds, overridable through ARR_MAX_HYPERPLANES (which lifts the
// subset-scan style limits).
struct Bounds {
  int whitney = 16;
  int nice_partition = 14;
  int chamber_rank = 6;
  int ideal_enumeration = 40;
};
Bounds bounds_from_env();

extern const std::set<std::string> kAllChecks;
// {"lattice","charpoly","supersolvable","simplicial","generic",
//  "simple-triangle","factored","free-probe"}

// Runs the requested checks, honoring preconditions. Fields that a
// precondition rules out come back null and are listed in "skipped".
// Rationals are emitted as strings; keys are sorted by the JSON library.
nlohmann::json criteria_report(const Arrangement& a, const std::set<std::string>& checks,
                               const Bounds& bounds = bounds_from_env());

nlohmann::json triangle_json(const TriangleWitness& w);
nlohmann::json charpoly_json(const Poly& chi);

}  // namespace arr
