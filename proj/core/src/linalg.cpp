#include "arr/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace arr {

Rat rat_parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string buf(s);
  Rat r;
  if (r.set_str(buf, 10) != 0) throw std::invalid_argument("bad rational literal: " + buf);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + buf);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_str();
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::string vec_str(const RatVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += rat_str(v[i]);
  }
  return s;
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, int cols) {
  RatMat m(int(rows.size()), cols);
  for (int i = 0; i < int(rows.size()); ++i) {
    if (int(rows[i].size()) != cols) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec RatMat::row(int i) const {
  RatVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void RatMat::append_row(const RatVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = int(r.size());
  if (int(r.size()) != cols_) throw std::invalid_argument("append_row: width mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

std::string RatMat::str() const {
  std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (const auto& x : a_) {
    s += x.get_str();
    s += ',';
  }
  return s;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  RatMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  if (int(v.size()) != m.cols()) throw std::invalid_argument("mat_vec: shape mismatch");
  RatVec r(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rat s = 0;
    for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

RatVec vec_mat(const RatVec& v, const RatMat& m) {
  if (int(v.size()) != m.rows()) throw std::invalid_argument("vec_mat: shape mismatch");
  RatVec r(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

RatMat mat_stack(const RatMat& top, const RatMat& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("mat_stack: width mismatch");
  RatMat m(top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < bottom.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
  return m;
}

RrefResult rref(const RatMat& m) {
  RatMat w = m;
  const int rows = w.rows(), cols = w.cols();
  int lead = 0;
  std::vector<int> pivot_cols;
  for (int r = 0; r < rows && lead < cols; ++r) {
    int i = r;
    while (i < rows && w.at(i, lead) == 0) ++i;
    if (i == rows) {
      --r;
      ++lead;
      continue;
    }
    if (i != r)
      for (int j = 0; j < cols; ++j) swap(w.at(i, j), w.at(r, j));
    Rat inv = 1 / w.at(r, lead);
    for (int j = lead; j < cols; ++j) w.at(r, j) *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r) continue;
      Rat f = w.at(k, lead);
      if (f == 0) continue;
      for (int j = lead; j < cols; ++j) w.at(k, j) -= f * w.at(r, j);
    }
    pivot_cols.push_back(lead);
    ++lead;
  }
  const int rank = int(pivot_cols.size());
  RatMat out(rank, cols);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = w.at(i, j);
  return {std::move(out), rank};
}

int rank_of(const RatMat& m) {
  EchelonBasis eb(m.cols());
  for (int i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
  return eb.rank();
}

RatMat kernel_basis(const RatMat& m) {
  const int n = m.cols();
  auto [r, rank] = rref(m);
  std::vector<int> pivot_of_row(rank, -1);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i) {
    int j = 0;
    while (j < n && r.at(i, j) == 0) ++j;
    pivot_of_row[i] = j;
    is_pivot[j] = true;
  }
  std::vector<RatVec> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    RatVec v(n, Rat(0));
    v[j] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_of_row[i]] = -r.at(i, j);
    basis.push_back(std::move(v));
  }
  return rref(RatMat::from_rows(basis, n)).matrix;
}

Rat det(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  RatMat w = m;
  const int n = w.rows();
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && w.at(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) swap(w.at(p, j), w.at(c, j));
      d = -d;
    }
    d *= w.at(c, c);
    Rat inv = 1 / w.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      Rat f = w.at(i, c) * inv;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return d;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const int n = m.rows();
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [r, rank] = rref(aug);
  if (rank != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.at(i, j) != (i == j ? Rat(1) : Rat(0))) return std::nullopt;
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

bool EchelonBasis::insert(RatVec row) {
  if (int(row.size()) != cols_) throw std::invalid_argument("EchelonBasis: width mismatch");
  for (size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (row[p] == 0) continue;
    Rat f = row[p] / rows_[k][p];
    for (int j = p; j < cols_; ++j) row[j] -= f * rows_[k][j];
  }
  int p = 0;
  while (p < cols_ && row[p] == 0) ++p;
  if (p == cols_) return false;
  // keep rows sorted by pivot column
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool EchelonBasis::in_span(RatVec row) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (row[p] == 0) continue;
    Rat f = row[p] / rows_[k][p];
    for (int j = p; j < cols_; ++j) row[j] -= f * rows_[k][j];
  }
  return is_zero_vec(row);
}

Subspace Subspace::span(int ambient_dim, const std::vector<RatVec>& rows) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = rref(RatMat::from_rows(rows, ambient_dim)).matrix;
  return s;
}

Subspace Subspace::whole(int ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = RatMat::identity(ambient_dim);
  return s;
}

Subspace Subspace::zero(int ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = RatMat(0, ambient_dim);
  return s;
}

bool Subspace::contains_vec(const RatVec& v) const {
  EchelonBasis eb(ambient_);
  for (int i = 0; i < basis_.rows(); ++i) eb.insert(basis_.row(i));
  return eb.in_span(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("contains: ambient dimension mismatch");
  EchelonBasis eb(ambient_);
  for (int i = 0; i < basis_.rows(); ++i) eb.insert(basis_.row(i));
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!eb.in_span(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("sum: ambient dimension mismatch");
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = rref(mat_stack(basis_, other.basis_)).matrix;
  return s;
}

Subspace Subspace::perp() const {
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = kernel_basis(basis_);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("intersect: ambient dimension mismatch");
  // Over Q the standard form is anisotropic, so (A cap B) = (A^perp + B^perp)^perp.
  return perp().sum(other.perp()).perp();
}

std::string Subspace::key() const {
  return std::to_string(ambient_) + "|" + basis_.str();
}

}  // namespace arr
