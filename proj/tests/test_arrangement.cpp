#include "doctest.h"

#include "arr/arrangement.hpp"
#include "helpers.hpp"

using namespace arr;
using arrtest::v;
using arrtest::make_arr;

TEST_CASE("normal canonicalization") {
  CHECK(canonicalize_normal(v("2,-4,6")) == v("1,-2,3"));
  CHECK(canonicalize_normal(v("-1,2,0")) == v("1,-2,0"));
  CHECK(canonicalize_normal(v("0,-1/2,1/3")) == v("0,3,-2"));
  CHECK_THROWS_AS(canonicalize_normal(v("0,0,0")), std::invalid_argument);
}

TEST_CASE("proportional normals merge with a warning flag") {
  Arrangement a(2, {v("1,0"), v("-2,0"), v("0,1")});
  CHECK(a.size() == 2);
  CHECK(a.had_duplicates());
  Arrangement clean(2, {v("1,0"), v("0,1")});
  CHECK_FALSE(clean.had_duplicates());
}

TEST_CASE("json round trip is lossless") {
  arrtest::Rng rng(23);
  for (int it = 0; it < 30; ++it) {
    int dim = rng.uniform(1, 5);
    Arrangement a = rng.arrangement(dim, 8);
    Arrangement b = arrangement_from_json_text(arrangement_to_json_text(a));
    CHECK(a.dim() == b.dim());
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) CHECK(a[i].normal == b[i].normal);
  }
}

TEST_CASE("json parses p/q strings and rejects garbage") {
  auto a = arrangement_from_json_text(
      R"({"dim":2,"hyperplanes":[{"normal":["1/2","-1"],"label":"h"}]})");
  CHECK(a.size() == 1);
  CHECK(a[0].normal == v("1,-2"));
  CHECK(a[0].label == "h");
  CHECK_THROWS(arrangement_from_json_text(R"({"dim":2})"));
  CHECK_THROWS(arrangement_from_json_text(
      R"({"dim":2,"hyperplanes":[{"normal":["x","1"]}]})"));
}

TEST_CASE("apply_linear_map: identity and scaling act trivially") {
  Arrangement a = arrtest::lemma_a();
  Arrangement id = apply_linear_map(a, RatMat::identity(3));
  CHECK(id.normal_keys() == a.normal_keys());
  RatMat twice = RatMat::identity(3);
  for (int i = 0; i < 3; ++i) twice.at(i, i) = 2;
  CHECK(apply_linear_map(a, twice).normal_keys() == a.normal_keys());
}

TEST_CASE("apply_linear_map carries A(1) onto the lemma arrangement") {
  // (x,y,z) |-> (x-y, y-z, y+z)
  RatMat t = RatMat::from_rows({v("1,-1,0"), v("0,1,-1"), v("0,1,1")}, 3);
  Arrangement image = apply_linear_map(arrtest::a_of_t(Rat(1)), t);
  CHECK(image.normal_keys() == arrtest::lemma_a().normal_keys());
}

TEST_CASE("apply_linear_map rejects singular maps") {
  RatMat sing = RatMat::from_rows({v("1,0,0"), v("0,1,0"), v("1,1,0")}, 3);
  CHECK_THROWS_AS(apply_linear_map(arrtest::lemma_a(), sing), std::invalid_argument);
}

TEST_CASE("genericness") {
  CHECK_FALSE(is_generic(arrtest::boolean_arr(3)));  // only l hyperplanes
  Arrangement four = make_arr(3, {"1,0,0", "0,1,0", "0,0,1", "1,1,1"});
  CHECK(is_generic(four));
  CHECK_FALSE(is_generic(arrtest::lemma_a()));  // concurrent triple exists
}

TEST_CASE("essentialize flattens a non-essential arrangement") {
  // two hyperplanes in dim 3 sharing the z-axis direction: rank 2
  Arrangement a = make_arr(3, {"1,0,0", "0,1,0", "1,1,0"});
  CHECK(a.rank() == 2);
  auto ess = essentialize(a);
  CHECK(ess.arrangement.dim() == 2);
  CHECK(ess.arrangement.size() == 3);
  CHECK(ess.arrangement.is_essential());
  // chart rows form a basis of the normal span
  CHECK(ess.chart.rows() == 2);
  // essential normals evaluated through the chart reproduce the originals up
  // to canonical scaling: chart^T c = alpha
  for (int i = 0; i < a.size(); ++i) {
    RatVec back = vec_mat(ess.arrangement[i].normal, ess.chart);
    CHECK(canonicalize_normal(back) == a[i].normal);
  }
}

TEST_CASE("essentialize keeps essential arrangements intact") {
  auto ess = essentialize(arrtest::lemma_a());
  CHECK(ess.arrangement.dim() == 3);
  CHECK(ess.arrangement.normal_keys() == arrtest::lemma_a().normal_keys());
}
