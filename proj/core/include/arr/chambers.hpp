#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/lattice.hpp"

namespace arr {

// An open chamber of the complement of a real essential arrangement,
// identified by its sign vector ('+'/'-' per hyperplane, in order).
struct ChamberCone {
  std::string signs;
  std::vector<int> walls;  // hyperplanes carrying a facet, sorted
  RatVec witness;          // exact interior point
};

// All chambers, sorted lexicographically by sign vector. Incremental
// insertion with exact LP feasibility; walls come from sign-flip adjacency
// (two chambers share a facet on H_i iff their signs differ exactly at i).
// Requires an essential arrangement of rank <= rank_bound.
std::vector<ChamberCone> enumerate_chambers(const Arrangement& a, int rank_bound = 6);

// Independent count: |chi(A, -1)| via the intersection lattice.
long long zaslavsky_count(const Arrangement& a);

// Every chamber of an essential arrangement is a pointed full-dimensional
// cone, so it is simplicial iff its facet count equals the rank.
struct SimplicialityReport {
  bool simplicial = false;
  std::optional<ChamberCone> counterexample;  // first offender in sign order
};
SimplicialityReport is_simplicial(const Arrangement& a, int rank_bound = 6);

// A rank-2 flat seen as a projective vertex: the line and the hyperplanes
// through it.
struct VertexFlat {
  Subspace line;
  std::vector<int> on;  // localization, sorted
  RatVec direction;     // primitive spanning vector of the line
};

// A "simple triangle": a chamber with exactly three walls whose three
// extreme rays each lie on a double point (a rank-2 flat on exactly two
// hyperplanes of the full arrangement).
struct TriangleWitness {
  ChamberCone chamber;
  std::array<VertexFlat, 3> vertex_flats;
};

// Direct search over wall triples of an essential rank-3 arrangement: the
// candidate cone spanned by the three double-point rays is a chamber iff
// every other hyperplane evaluates with one strict sign on all three rays.
// Returns the witness with the lexicographically least sign vector.
std::optional<TriangleWitness> find_simple_triangle(const Arrangement& a);

}  // namespace arr
