#include "doctest.h"

#include "arr/linalg.hpp"
#include "helpers.hpp"

using namespace arr;
using arrtest::v;

TEST_CASE("rref identity") {
  auto [m, rank] = rref(RatMat::identity(3));
  CHECK(rank == 3);
  CHECK(m == RatMat::identity(3));
}

TEST_CASE("rref dependent rows") {
  // third row is the sum of the first two
  RatMat m = RatMat::from_rows({v("1,-1,0"), v("0,1,-1"), v("1,0,-1")}, 3);
  CHECK(rref(m).rank == 2);
}

TEST_CASE("rref of the six lemma normals has full rank") {
  Arrangement a = arrtest::lemma_a();
  RatMat m(0, 3);
  for (const auto& h : a.hyperplanes()) m.append_row(h.normal);
  CHECK(rref(m).rank == 3);
}

TEST_CASE("rref idempotent on random matrices") {
  arrtest::Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    int rows = rng.uniform(1, 5), cols = rng.uniform(1, 5);
    std::vector<RatVec> rs;
    for (int i = 0; i < rows; ++i) rs.push_back(rng.vec(cols));
    RatMat m = RatMat::from_rows(rs, cols);
    auto first = rref(m);
    auto second = rref(first.matrix);
    CHECK(first.matrix == second.matrix);
    CHECK(first.rank == second.rank);
  }
}

TEST_CASE("subspace intersect: coordinate planes") {
  auto plane_x0 = Subspace::span(3, {v("0,1,0"), v("0,0,1")});  // x = 0
  auto plane_y0 = Subspace::span(3, {v("1,0,0"), v("0,0,1")});  // y = 0
  auto line = plane_x0.intersect(plane_y0);
  CHECK(line.dim() == 1);
  CHECK(line.contains_vec(v("0,0,5")));
  CHECK(line == Subspace::span(3, {v("0,0,1")}));
}

TEST_CASE("subspace intersect: ker(y) cap ker(x-y) is the z-axis") {
  auto ker_y = Subspace::span(3, {v("1,0,0"), v("0,0,1")});
  auto ker_xy = Subspace::span(3, {v("1,1,0"), v("0,0,1")});
  CHECK(ker_y.intersect(ker_xy) == Subspace::span(3, {v("0,0,1")}));
}

TEST_CASE("subspace intersect idempotent") {
  auto s = Subspace::span(3, {v("1,2,3"), v("0,1,-1")});
  CHECK(s.intersect(s) == s);
}

TEST_CASE("containment basics") {
  auto whole = Subspace::whole(3);
  auto z_axis = Subspace::span(3, {v("0,0,1")});
  auto ker_y = Subspace::span(3, {v("1,0,0"), v("0,0,1")});
  CHECK(whole.contains(z_axis));
  CHECK(whole.contains(ker_y));
  CHECK(ker_y.contains(z_axis));
  CHECK_FALSE(z_axis.contains(ker_y));
}

TEST_CASE("intersection is a lower bound, and the modular law holds") {
  arrtest::Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    int dim = rng.uniform(2, 5);
    std::vector<RatVec> ra, rb;
    for (int i = 0, n = rng.uniform(1, dim); i < n; ++i) ra.push_back(rng.vec(dim));
    for (int i = 0, n = rng.uniform(1, dim); i < n; ++i) rb.push_back(rng.vec(dim));
    auto a = Subspace::span(dim, ra);
    auto b = Subspace::span(dim, rb);
    auto cap = a.intersect(b);
    auto sum = a.sum(b);
    CHECK(a.contains(cap));
    CHECK(b.contains(cap));
    CHECK(cap.dim() + sum.dim() == a.dim() + b.dim());
    CHECK(cap.dim() >= a.dim() + b.dim() - dim);
  }
}

TEST_CASE("perp is an involution") {
  arrtest::Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    int dim = rng.uniform(1, 5);
    std::vector<RatVec> rs;
    for (int i = 0, n = rng.uniform(0, dim); i < n; ++i) rs.push_back(rng.vec(dim));
    auto s = Subspace::span(dim, rs);
    CHECK(s.perp().perp() == s);
    CHECK(s.perp().dim() == dim - s.dim());
  }
}

TEST_CASE("inverse and det agree") {
  arrtest::Rng rng(17);
  for (int it = 0; it < 20; ++it) {
    int n = rng.uniform(1, 4);
    RatMat m = rng.invertible(n);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(m, *inv) == RatMat::identity(n));
  }
  RatMat sing = RatMat::from_rows({v("1,2"), v("2,4")}, 2);
  CHECK(det(sing) == 0);
  CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("dimension mismatch raises") {
  auto a = Subspace::whole(3);
  auto b = Subspace::whole(2);
  CHECK_THROWS_AS(a.intersect(b), std::invalid_argument);
  CHECK_THROWS_AS(a.contains(b), std::invalid_argument);
}

TEST_CASE("echelon basis tracks rank incrementally") {
  EchelonBasis eb(3);
  CHECK(eb.insert(v("1,-1,0")));
  CHECK(eb.insert(v("0,1,-1")));
  CHECK_FALSE(eb.insert(v("1,0,-1")));
  CHECK(eb.rank() == 2);
  CHECK(eb.in_span(v("2,-1,-1")));
  CHECK_FALSE(eb.in_span(v("0,0,1")));
}
