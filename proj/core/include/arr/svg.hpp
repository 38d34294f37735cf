#pragma once
#include <iosfwd>
#include <optional>
#include <string>

#include "arr/chambers.hpp"

namespace arr {

// Draws the affine slice {chart . v = 1} of an essential rank-3 real
// arrangement: one line per hyperplane, one dot per rank-2 flat (radius grows
// with its multiplicity), and the witness triangle shaded when given.
// The chart functional must not be proportional to any normal (that line
// would be at infinity). Output is deterministic for fixed inputs.
std::string projective_svg(const Arrangement& a, const RatVec& chart,
                           const std::optional<TriangleWitness>& highlight);

void emit_projective_svg(const Arrangement& a, const RatVec& chart,
                         const std::optional<TriangleWitness>& highlight,
                         const std::string& out_path);

}  // namespace arr
