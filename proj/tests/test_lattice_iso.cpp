#include "doctest.h"

#include "arr/lattice.hpp"
#include "arr/lattice_iso.hpp"
#include "helpers.hpp"

using namespace arr;
using arrtest::make_arr;

namespace {

// sigma really preserves all subset ranks (brute force over subsets)
void check_is_rank_preserving(const Arrangement& a, const Arrangement& b,
                              const std::vector<int>& sigma) {
  REQUIRE(int(sigma.size()) == a.size());
  for (uint64_t s = 0; s < (uint64_t(1) << a.size()); ++s) {
    EchelonBasis ea(a.dim()), eb(b.dim());
    for (int i = 0; i < a.size(); ++i) {
      if (!(s & (uint64_t(1) << i))) continue;
      ea.insert(a[i].normal);
      eb.insert(b[sigma[i]].normal);
    }
    REQUIRE(ea.rank() == eb.rank());
  }
}

}  // namespace

TEST_CASE("an arrangement is isomorphic to itself") {
  Arrangement a = arrtest::lemma_a();
  auto sigma = lattice_isomorphic(a, a);
  REQUIRE(sigma.has_value());
  check_is_rank_preserving(a, a, *sigma);
}

TEST_CASE("A(1) and A(-2) share their lattice") {
  Arrangement a1 = arrtest::a_of_t(Rat(1));
  Arrangement am2 = arrtest::a_of_t(Rat(-2));
  auto sigma = lattice_isomorphic(a1, am2);
  REQUIRE(sigma.has_value());
  check_is_rank_preserving(a1, am2, *sigma);
}

TEST_CASE("A(0) degenerates: only 5 distinct hyperplanes") {
  Arrangement a0 = arrtest::a_of_t(Rat(0));
  CHECK(a0.size() == 5);
  CHECK(a0.had_duplicates());
  CHECK_FALSE(lattice_isomorphic(arrtest::a_of_t(Rat(1)), a0).has_value());
}

TEST_CASE("same size but different lattices") {
  // generic 4 lines vs. 4 lines with a triple point, both essential in dim 3
  Arrangement generic = make_arr(3, {"1,0,0", "0,1,0", "0,0,1", "1,1,1"});
  Arrangement pencil = make_arr(3, {"1,0,0", "0,1,0", "1,1,0", "0,0,1"});
  CHECK_FALSE(lattice_isomorphic(generic, pencil).has_value());
}

TEST_CASE("invertible maps induce lattice isomorphisms") {
  arrtest::Rng rng(31);
  for (int it = 0; it < 15; ++it) {
    int dim = rng.uniform(2, 4);
    Arrangement a = rng.arrangement(dim, 8);
    if (a.size() == 0) continue;
    Arrangement b = apply_linear_map(a, rng.invertible(dim));
    auto sigma = lattice_isomorphic(a, b);
    REQUIRE(sigma.has_value());
    check_is_rank_preserving(a, b, *sigma);
  }
}
