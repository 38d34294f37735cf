#pragma once
#include <random>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"

namespace arrtest {

using namespace arr;

inline RatVec v(const std::string& csv) {
  RatVec out;
  size_t p = 0;
  while (p <= csv.size()) {
    size_t q = csv.find(',', p);
    if (q == std::string::npos) q = csv.size();
    out.push_back(rat_parse(csv.substr(p, q - p)));
    p = q + 1;
  }
  return out;
}

inline Arrangement make_arr(int dim, const std::vector<std::string>& rows) {
  std::vector<RatVec> normals;
  for (const auto& r : rows) normals.push_back(v(r));
  return Arrangement(dim, normals);
}

// Q(A) = y (x-y) (x^2-z^2) (y^2-z^2)
inline Arrangement lemma_a() {
  return make_arr(3, {"0,1,0", "1,-1,0", "1,0,1", "1,0,-1", "0,1,1", "0,1,-1"});
}

// Q(A(t)) = x y z (x+y) (x+z) (y+tz)
inline Arrangement a_of_t(const Rat& t) {
  std::vector<RatVec> normals = {
      v("1,0,0"), v("0,1,0"), v("0,0,1"), v("1,1,0"), v("1,0,1"), {Rat(0), Rat(1), t}};
  return Arrangement(3, normals);
}

inline Arrangement boolean_arr(int n) {
  std::vector<RatVec> normals;
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    normals.push_back(e);
  }
  return Arrangement(n, normals);
}

// Deterministic small random rationals, entries in {-3..3}/{1,2}.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  Rat rat() {
    int num = uniform(-3, 3);
    int den = uniform(1, 2);
    return make_rat(num, den);
  }
  RatVec vec(int dim) {
    RatVec r(dim);
    for (auto& x : r) x = rat();
    return r;
  }
  RatVec nonzero_vec(int dim) {
    for (;;) {
      RatVec r = vec(dim);
      if (!is_zero_vec(r)) return r;
    }
  }
  Arrangement arrangement(int dim, int max_hyperplanes) {
    int n = uniform(1, max_hyperplanes);
    std::vector<RatVec> normals;
    for (int i = 0; i < n; ++i) normals.push_back(nonzero_vec(dim));
    return Arrangement(dim, normals);
  }
  RatMat invertible(int n) {
    for (;;) {
      std::vector<RatVec> rows;
      for (int i = 0; i < n; ++i) rows.push_back(vec(n));
      RatMat m = RatMat::from_rows(rows, n);
      if (det(m) != 0) return m;
    }
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace arrtest
