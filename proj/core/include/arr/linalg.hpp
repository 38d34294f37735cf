#pragma once
#include <optional>
#include <string>
#include <vector>

#include "arr/rational.hpp"

namespace arr {

using RatVec = std::vector<Rat>;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
bool is_zero_vec(const RatVec& v);
std::string vec_str(const RatVec& v);

// Dense rational matrix, row major.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static RatMat identity(int n);
  static RatMat from_rows(const std::vector<RatVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  RatVec row(int i) const;
  void append_row(const RatVec& r);

  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  std::string str() const;  // canonical serialization, usable as a hash key

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& m, const RatVec& v);   // m * v
RatVec vec_mat(const RatVec& v, const RatMat& m);   // v^T * m (row vector times matrix)
RatMat mat_stack(const RatMat& top, const RatMat& bottom);
Rat det(const RatMat& m);
std::optional<RatMat> inverse(const RatMat& m);

struct RrefResult {
  RatMat matrix;  // unique reduced row-echelon form, zero rows dropped
  int rank = 0;
};
RrefResult rref(const RatMat& m);

int rank_of(const RatMat& m);

// Basis of {x : m x = 0}, returned in RREF (canonical).
RatMat kernel_basis(const RatMat& m);

// Incremental rank tracker: keeps an echelon basis of the rows fed in.
// Cheap to copy, which the Whitney subset scan leans on.
class EchelonBasis {
 public:
  explicit EchelonBasis(int cols) : cols_(cols) {}
  // Returns true and absorbs the row if it enlarges the span.
  bool insert(RatVec row);
  // True iff row lies in the current span (does not modify the basis).
  bool in_span(RatVec row) const;
  int rank() const { return int(rows_.size()); }
  int cols() const { return cols_; }

 private:
  int cols_;
  std::vector<RatVec> rows_;   // echelon rows, pivot columns strictly increasing
  std::vector<int> pivots_;
};

// Linear subspace of Q^n represented by a spanning basis in RREF.
// The RREF rows are the canonical representative: two Subspace values are
// equal iff the bases agree entrywise.
class Subspace {
 public:
  Subspace() = default;
  // Spans the given rows (need not be independent).
  static Subspace span(int ambient_dim, const std::vector<RatVec>& rows);
  static Subspace whole(int ambient_dim);
  static Subspace zero(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  int codim() const { return ambient_ - basis_.rows(); }
  const RatMat& basis() const { return basis_; }

  bool contains_vec(const RatVec& v) const;
  bool contains(const Subspace& other) const;  // other subseteq this
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace perp() const;  // orthogonal complement w.r.t. the standard form

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  std::string key() const;  // canonical string, used as hash key

 private:
  int ambient_ = 0;
  RatMat basis_;  // RREF, independent rows
};

}  // namespace arr
