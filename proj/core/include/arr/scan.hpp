#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arr/chambers.hpp"
#include "arr/roots.hpp"

namespace arr {

// A simple-triangle certificate for a rank-3 restriction. Either the
// restriction's own real picture shows the triangle (realized = true), or
// the restriction shares its lattice with the reference arrangement whose
// negative-parameter realization does; in that case walls and vertex flats
// are transported along the lattice bijection.
struct TriangleCertificate {
  bool realized = false;          // triangle visible in this very realization
  std::vector<int> walls;         // three hyperplane indices of the restriction
  std::vector<std::vector<std::string>> vertex_flat_bases;  // RREF rows each
  std::string signs;              // chamber sign vector when realized
};

// Outcome of the simple-triangle test on one dimension-3 restriction.
struct RestrictionOutcome {
  std::vector<std::string> flat_basis;  // RREF rows of the flat, serialized
  int flat_rank = 0;
  int restriction_rank = 0;             // < 3 rules the test out
  std::optional<TriangleCertificate> certificate;
};

struct ScanRecord {
  int index = 0;  // position in the ideal enumeration
  std::vector<std::string> generator_names;
  std::vector<std::vector<int>> generator_simple_coords;
  int arrangement_size = 0;
  std::vector<RestrictionOutcome> restrictions;
  bool flagged = false;  // some restriction carries a certificate
};

nlohmann::json scan_record_json(const ScanRecord& r);

// For every ideal of the root system: restrict A_I to each dimension-3 flat
// of its lattice and decide the simple-triangle obstruction. A restriction
// counts when it has a simple triangle of its own on at least four
// hyperplanes (three make the aspherical Boolean cone), or when it is
// lattice-isomorphic to the reference arrangement of lemma_arrangement(),
// whose family carries the triangle at negative parameters. Deterministic
// output in enumeration order regardless of the worker count. `only`
// restricts the computation to the given ideal indices (resume support).
std::vector<ScanRecord> scan_simple_triangle_restrictions(
    const RootSystem& rs, int jobs = 1, int ideal_bound = 40,
    const std::optional<std::vector<int>>& only = std::nullopt);

}  // namespace arr
