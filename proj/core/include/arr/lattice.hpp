#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/polynomial.hpp"

namespace arr {

// An element of L(A): an intersection of hyperplanes. We carry both the
// subspace itself and the span of the normals vanishing on it; the latter is
// the working representation (rank = its dimension, closure = row-space sum).
struct Flat {
  Subspace subspace;       // the points
  Subspace normal_space;   // span of the normals of the hyperplanes containing it
  std::vector<int> loc;    // indices of exactly those hyperplanes, sorted
  uint64_t loc_mask = 0;
  int rank = 0;            // codim of subspace
  long long moebius = 0;   // filled by build_lattice

  std::string key() const { return normal_space.key(); }
};

// Builds the flat of `a` whose points are exactly `s`, with localization and
// rank populated. Returns nullopt if s is not an intersection of hyperplanes
// of a (i.e. not a lattice element). Does not need the full lattice.
std::optional<Flat> flat_of_subspace(const Arrangement& a, const Subspace& s);

// L(A), ordered by reverse inclusion and graded by rank; rank 0 is {V}.
// Flats are closures of hyperplane subsets, so x <= y iff loc(x) is a subset
// of loc(y); localization bitmasks make the order and join/meet cheap.
class IntersectionLattice {
 public:
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(int i) const { return flats_[i]; }
  int size() const { return int(flats_.size()); }
  int top_rank() const { return int(by_rank_.size()) - 1; }
  const std::vector<int>& rank_stratum(int r) const {
    static const std::vector<int> empty;
    return (r >= 0 && r < int(by_rank_.size())) ? by_rank_[r] : empty;
  }

  bool leq(int x, int y) const {  // x <= y iff subspace(y) subseteq subspace(x)
    return (flats_[x].loc_mask & ~flats_[y].loc_mask) == 0;
  }
  int find_by_key(const std::string& normal_space_key) const;
  int find_flat_of(const Subspace& subspace) const;  // by point set, -1 if absent

  int join(int x, int y) const;  // subspace intersection X cap Y
  int meet(int x, int y) const;  // closure of the hyperplanes containing both
  int closure_of(uint64_t hyperplane_mask) const;  // minimal flat covering the set

  const Arrangement& arrangement() const { return *a_; }

 private:
  friend IntersectionLattice build_lattice(const Arrangement& a);
  const Arrangement* a_ = nullptr;
  std::vector<Flat> flats_;               // grouped by rank, deterministic order
  std::vector<std::vector<int>> by_rank_;
  std::unordered_map<std::string, int> index_;
};

// Requires |A| <= 64 (localizations are bitmasks); far above anything in scope.
IntersectionLattice build_lattice(const Arrangement& a);

// chi(A,t) = sum_X mu(X) t^{dim X}
Poly charpoly(const IntersectionLattice& lat);

// Independent oracle: chi(A,t) = sum over subsets S of (-1)^{|S|} t^{dim cap S}.
// Exponential; refuses |A| > bound.
Poly whitney_charpoly(const Arrangement& a, int bound = 16);

// {H in A : X subseteq H}, same ambient space.
Arrangement localize(const Arrangement& a, const Flat& x);

// The arrangement induced on X by the traces of the hyperplanes off X,
// expressed on the chart (rows = RREF basis of X). Duplicate traces merge;
// merged labels join the parent labels with "|".
struct Restriction {
  Arrangement arrangement;
  RatMat chart;
};
Restriction restrict_to(const Arrangement& a, const Flat& x);

}  // namespace arr
