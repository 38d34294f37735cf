#pragma once
#include <optional>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/lattice.hpp"

namespace arr {

// A positive root in both coordinate systems: e-coordinates on the ambient
// Euclidean space and nonnegative coefficients on the Bourbaki simple roots.
struct Root {
  std::vector<int> e;       // length n
  std::vector<int> simple;  // length = rank
  int height = 0;           // sum of simple coefficients
  std::string name;         // "e1+e3", "e1-e2", ...
};

enum class RootType : char { A = 'A', B = 'B', C = 'C', D = 'D' };

class RootSystem {
 public:
  // Bourbaki conventions; D requires n >= 4 (A/B/C: n >= 1, B/C n >= 2).
  static RootSystem make(RootType type, int n);

  RootType type() const { return type_; }
  int n() const { return n_; }                      // rank
  int ambient_dim() const { return ambient_; }      // n for B/C/D, n+1 for A
  int size() const { return int(roots_.size()); }   // number of positive roots
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(int i) const { return roots_[i]; }

  // index of the root with these e-coordinates, or -1
  int find_e(const std::vector<int>& e) const;
  // parses "e1+e3" / "e2-e5" / simple-coefficient lists "0,1,2,1,1"
  int parse_root(const std::string& text) const;
  // e-coordinates of sum(c_i alpha_i); the label-conversion direction used
  // to check tables stated in simple-root coefficients
  std::vector<int> simple_combo_to_e(const std::vector<int>& coeffs) const;

  // alpha <= beta in the root poset: beta - alpha has nonnegative simple
  // coefficients (equivalently is a Z>=0-combination of positive roots).
  bool leq(int alpha, int beta) const;

 private:
  RootType type_;
  int n_ = 0, ambient_ = 0;
  std::vector<Root> roots_;
};

// Upper order ideal of the positive roots.
struct RootIdeal {
  std::vector<int> members;     // sorted root indices, up-closed
  std::vector<int> generators;  // the <=-minimal members, sorted
};

// Up-closure of the given roots; generators are recomputed (the input need
// not be an antichain). Throws if an index is out of range.
RootIdeal ideal_from_generators(const RootSystem& rs, const std::vector<int>& gens);

// A_I: one hyperplane per root in the complement of the ideal.
Arrangement ideal_arrangement(const RootSystem& rs, const RootIdeal& ideal);

// The two ideal families behind the rank-3 restriction construction in D_n:
//   (i)  generated by e_1 + e_{n-1};
//   (ii) generated by e_1 + e_{n-1} and e_s + e_t, 1 < s < t < n-1.
RootIdeal lemma_ideal_i(const RootSystem& d, int n);
RootIdeal lemma_ideal_ii(const RootSystem& d, int n, int s, int t);

// Y = cap_{2 <= i < j <= n-1} ker(x_i - x_j) as a flat of the ideal
// arrangement; dimension 3, chart (x_1, x_2, x_n).
Flat lemma_flat_y(const Arrangement& a, int n);

// The canonical rank-3 target: (x1-x2) x2 (x1^2-xn^2) (x2^2-xn^2) in the
// chart coordinates (x1, x2, xn); returned as sorted canonical normal keys.
std::vector<std::string> lemma_restriction_keys();

// Every upper order ideal, deterministically ordered: the empty ideal first,
// all of Phi+ last. Refuses root systems above the bound.
std::vector<RootIdeal> enumerate_ideals(const RootSystem& rs, int bound = 40);

}  // namespace arr
