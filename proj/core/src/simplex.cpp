#include "arr/simplex.hpp"

#include <stdexcept>

namespace arr {

namespace {

// Phase-1 simplex for {B u >= 1, u free}: standard form
//   B p - B q - s + a = 1,  p, q, s, a >= 0,  minimize sum(a).
// Columns: [p(0..k-1) | q(k..2k-1) | s(2k..2k+m-1) | a(2k+m..2k+2m-1) | rhs].
std::optional<RatVec> phase1(const std::vector<RatVec>& b, int k) {
  const int m = int(b.size());
  if (m == 0) return RatVec(k, Rat(0));
  const int cols = 2 * k + 2 * m;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      t[i][j] = b[i][j];
      t[i][k + j] = -b[i][j];
    }
    t[i][2 * k + i] = -1;          // slack
    t[i][2 * k + m + i] = 1;       // artificial
    t[i][cols] = 1;                // rhs
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = 2 * k + m + i;

  // reduced costs for minimizing sum of artificials: obj[j] = c_j - sum_i t[i][j]
  std::vector<Rat> obj(cols + 1, Rat(0));
  for (int j = 0; j <= cols; ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += t[i][j];
    obj[j] = -s;
  }
  for (int i = 0; i < m; ++i) obj[2 * k + m + i] += 1;  // c_a = 1

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;  // Bland: first improving column
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-1 simplex unbounded");
    // pivot (leave, enter)
    Rat piv = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  // objective value: artificials still in the basis carry the residual
  Rat value = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= 2 * k + m) value += t[i][cols];
  if (value != 0) return std::nullopt;

  RatVec u(k, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < k)
      u[basis[i]] += t[i][cols];
    else if (basis[i] < 2 * k)
      u[basis[i] - k] -= t[i][cols];
  }
  return u;
}

}  // namespace

std::optional<RatVec> feasible_point(const std::vector<RatVec>& ge_one,
                                     const std::vector<RatVec>& eq_zero, int dim) {
  if (eq_zero.empty()) {
    auto u = phase1(ge_one, dim);
    return u;
  }
  RatMat ker = kernel_basis(RatMat::from_rows(eq_zero, dim));
  const int k = ker.rows();
  if (k == 0) return ge_one.empty() ? std::optional<RatVec>(RatVec(dim, Rat(0))) : std::nullopt;
  std::vector<RatVec> reduced;
  for (const auto& a : ge_one) {
    RatVec r(k);
    for (int i = 0; i < k; ++i) r[i] = dot(a, ker.row(i));
    reduced.push_back(std::move(r));
  }
  auto u = phase1(reduced, k);
  if (!u) return std::nullopt;
  RatVec v(dim, Rat(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < dim; ++j) v[j] += (*u)[i] * ker.at(i, j);
  return v;
}

}  // namespace arr
