#pragma once
#include <optional>
#include <vector>

#include "arr/lattice.hpp"

namespace arr {

// Modularity via the rank identity against every flat:
//   r(x) + r(y) = r(x v y) + r(x ^ y).
bool is_modular(const IntersectionLattice& lat, int flat_index);

// A maximal chain V = X_0 < X_1 < ... < X_r of modular flats with
// consecutive ranks, if one exists (depth-first over modular flats).
std::optional<std::vector<int>> is_supersolvable(const IntersectionLattice& lat);

// Partition of the hyperplanes into r(A) blocks that is independent (any
// transversal of k distinct blocks has rank k) and induces a singleton block
// in every localization of rank >= 2. Block sizes are pinned to the integer
// roots of chi up front; a non-splitting chi refuses immediately.
std::optional<std::vector<std::vector<int>>> find_nice_partition(
    const Arrangement& a, const IntersectionLattice& lat, int bound = 14);

// One-directional freeness probe via Terao factorization: splitting of chi
// over the nonnegative integers is necessary for freeness, never sufficient.
struct FreeProbe {
  bool possibly_free = false;
  std::vector<long> exponents;  // ascending, present iff possibly_free
};
FreeProbe free_probe(const Poly& chi);

}  // namespace arr
