#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arr/linalg.hpp"

namespace arr {

// A linear hyperplane ker(normal). The normal is canonical: coprime integer
// entries, first nonzero entry positive. Two hyperplanes are equal iff the
// canonical normals agree.
struct Hyperplane {
  RatVec normal;
  std::string label;

  bool operator==(const Hyperplane& o) const { return normal == o.normal; }
};

// Throws on the zero vector.
RatVec canonicalize_normal(const RatVec& v);

// Central arrangement: a duplicate-free ordered list of hyperplanes through
// the origin of Q^dim.
class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(int dim, std::vector<RatVec> normals, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  int size() const { return int(hyperplanes_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](int i) const { return hyperplanes_[i]; }
  // True when proportional normals were merged during construction.
  bool had_duplicates() const { return had_duplicates_; }

  RatMat normal_matrix() const;
  int rank() const;
  bool is_essential() const { return rank() == dim_; }

  // Index of the hyperplane with this (canonicalized) normal, or -1.
  int find(const RatVec& normal) const;

  Arrangement deleted(int index) const;  // arrangement minus one hyperplane

  // Sorted canonical normal keys; the multiset equality used all over the
  // test corpus (Q(A) as a set of linear forms).
  std::vector<std::string> normal_keys() const;

 private:
  int dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  bool had_duplicates_ = false;
};

// Coordinates of the essentialization: hyperplanes re-expressed on a basis of
// the span of the normals. `chart` rows are that basis (RREF), so a point
// with new coordinates c sits at v with chart-row coordinates c.
struct Essentialization {
  Arrangement arrangement;  // essential, ambient dim = rank of the input
  RatMat chart;             // rank x dim
};
Essentialization essentialize(const Arrangement& a);

// ker(alpha) -> ker(alpha o m); m must be invertible.
Arrangement apply_linear_map(const Arrangement& a, const RatMat& m);

// |A| >= dim+1 and every dim-subset of normals independent.
bool is_generic(const Arrangement& a);

// JSON interchange format:
//   {"dim": n, "hyperplanes": [{"normal": ["1","-1","0"], "label": "x1-x2"}]}
Arrangement arrangement_from_json_text(const std::string& text);
std::string arrangement_to_json_text(const Arrangement& a);
Arrangement load_arrangement(const std::string& path);
void save_arrangement(const Arrangement& a, const std::string& path);

}  // namespace arr
