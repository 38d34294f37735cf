#pragma once
#include <optional>
#include <vector>

#include "arr/linalg.hpp"

namespace arr {

// Exact feasibility for { v : a.v >= 1 for a in ge_one, e.v = 0 for e in eq_zero }.
// Returns a witness point or nullopt. Phase-1 simplex with Bland's rule over
// exact rationals; equalities are eliminated by restriction to their kernel.
// A cone {s_i a_i . v > 0} is nonempty iff this system with the signed normals
// is feasible, by scaling.
std::optional<RatVec> feasible_point(const std::vector<RatVec>& ge_one,
                                     const std::vector<RatVec>& eq_zero, int dim);

}  // namespace arr
