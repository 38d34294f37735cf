#pragma once
#include <set>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/polynomial.hpp"

namespace arr {

// A family of central arrangements whose normals carry univariate polynomial
// entries in one parameter t.
struct ParamArrangement {
  int dim = 0;
  std::vector<std::vector<Poly>> normals;  // each entry a polynomial in t

  // Specializes at t = value; proportional normals merge (the degenerate
  // members of a family are meant to be observable, not fatal).
  Arrangement at(const Rat& value) const;
};

// Q(A(t)) = x y z (x+y) (x+z) (y+tz), the one-parameter family whose
// negative members carry a simple triangle.
ParamArrangement lemma_family();

// Q(A) = y (x-y) (x^2-z^2) (y^2-z^2): the image of A(1) under
// (x,y,z) -> (x-y, y-z, y+z). The negative-parameter members of the family
// share its lattice and display a simple triangle, which is what makes this
// lattice class an asphericity obstruction.
Arrangement lemma_arrangement();

struct ExceptionalParams {
  std::set<Rat> values;               // all rational exceptional parameters
  std::vector<Poly> symbolic_factors; // rational-root-free factors of degree >= 2
  bool has_nonrational = false;       // some exceptional parameter is irrational
};

// A parameter is exceptional iff some subset of normals drops below its
// generic rank there (covers proportional collapses and vanishing normals).
// For every generically independent subset the minors' gcd is computed over
// Q[t]; rational roots are collected exactly and anything left of degree >= 2
// is reported symbolically.
ExceptionalParams exceptional_parameters(const ParamArrangement& p, int degree_bound = 8);

}  // namespace arr
