#include "arr/param.hpp"

#include <stdexcept>

namespace arr {

Arrangement ParamArrangement::at(const Rat& value) const {
  std::vector<RatVec> rows;
  for (const auto& n : normals) {
    RatVec r(dim);
    for (int j = 0; j < dim; ++j) r[j] = n[j].eval(value);
    rows.push_back(std::move(r));
  }
  return Arrangement(dim, rows);
}

ParamArrangement lemma_family() {
  ParamArrangement p;
  p.dim = 3;
  auto c = [](long v) { return Poly::constant(Rat(v)); };
  p.normals = {
      {c(1), c(0), c(0)},                  // x
      {c(0), c(1), c(0)},                  // y
      {c(0), c(0), c(1)},                  // z
      {c(1), c(1), c(0)},                  // x+y
      {c(1), c(0), c(1)},                  // x+z
      {c(0), c(1), Poly::variable()},      // y+tz
  };
  return p;
}

Arrangement lemma_arrangement() {
  std::vector<RatVec> normals = {
      {Rat(0), Rat(1), Rat(0)},  {Rat(1), Rat(-1), Rat(0)}, {Rat(1), Rat(0), Rat(1)},
      {Rat(1), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(1)},  {Rat(0), Rat(1), Rat(-1)}};
  std::vector<std::string> labels = {"y", "x-y", "x+z", "x-z", "y+z", "y-z"};
  return Arrangement(3, normals, labels);
}

namespace {

// generic rank over Q(t) via echelon elimination with polynomial pivots
int generic_rank(const std::vector<std::vector<Poly>>& rows) {
  auto m = rows;
  const int nr = int(m.size());
  if (nr == 0) return 0;
  const int nc = int(m[0].size());
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int piv = -1;
    for (int i = rank; i < nr; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = rank + 1; i < nr; ++i) {
      if (m[i][col].is_zero()) continue;
      // fraction-free cross-multiplication row update
      Poly a = m[rank][col], b = m[i][col];
      for (int j = col; j < nc; ++j) m[i][j] = m[i][j] * a - m[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ExceptionalParams exceptional_parameters(const ParamArrangement& p, int degree_bound) {
  for (const auto& n : p.normals) {
    bool nonzero = false;
    for (const auto& e : n) {
      if (e.degree() > degree_bound)
        throw std::invalid_argument("exceptional_parameters: degree bound exceeded");
      if (!e.is_zero()) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("exceptional_parameters: zero normal");
  }

  ExceptionalParams out;
  const int n = int(p.normals.size());
  const int d = p.dim;
  std::set<std::string> seen_factor;

  // all subsets of size 1..dim; rank drops of larger subsets are witnessed by
  // a generically independent subset inside them
  std::vector<int> idx;
  auto process = [&](const std::vector<int>& subset) {
    const int k = int(subset.size());
    std::vector<std::vector<Poly>> rows;
    for (int i : subset) rows.push_back(p.normals[i]);
    if (generic_rank(rows) < k) return;  // never independent, skip
    // gcd over all k x k minors; its roots are where the subset degenerates
    Poly g;
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    for (;;) {
      std::vector<std::vector<Poly>> minor(k, std::vector<Poly>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor[i][j] = rows[i][cols[j]];
      Poly det_ij = poly_det(minor);
      if (!det_ij.is_zero()) g = g.is_zero() ? det_ij : poly_gcd(g, det_ij);
      if (!g.is_zero() && g.degree() == 0) return;  // units have no roots
      int c = k - 1;
      while (c >= 0 && cols[c] == d - k + c) --c;
      if (c < 0) break;
      ++cols[c];
      for (int j = c + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    if (g.is_zero() || g.degree() == 0) return;
    auto split = split_rational_roots(g);
    for (const Rat& r : split.roots) out.values.insert(r);
    if (split.cofactor.degree() >= 2) {
      Poly sf = squarefree_part(split.cofactor).primitive_integer();
      out.has_nonrational = true;
      if (seen_factor.insert(sf.str()).second) out.symbolic_factors.push_back(sf);
    }
  };

  // enumerate subsets of each size via the usual revolving-door scan
  for (int k = 1; k <= std::min(n, d); ++k) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    for (;;) {
      process(subset);
      int c = k - 1;
      while (c >= 0 && subset[c] == n - k + c) --c;
      if (c < 0) break;
      ++subset[c];
      for (int j = c + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace arr
