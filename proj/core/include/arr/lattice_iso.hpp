#pragma once
#include <optional>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

// Searches for a bijection sigma of hyperplane indices such that every subset
// S of a has the same rank as sigma(S) in b, i.e. an isomorphism
// L(a) -> L(b) preserving rank and incidence. Returns the bijection
// (sigma[i] = index in b) or nullopt.
std::optional<std::vector<int>> lattice_isomorphic(const Arrangement& a,
                                                   const Arrangement& b);

}  // namespace arr
