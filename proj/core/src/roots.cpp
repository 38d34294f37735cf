#include "arr/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace arr {

namespace {

std::vector<RatVec> simple_roots_of(RootType type, int n, int ambient) {
  std::vector<RatVec> alphas;
  auto e = [&](int i) {  // 1-based unit vector
    RatVec v(ambient, Rat(0));
    v[i - 1] = 1;
    return v;
  };
  switch (type) {
    case RootType::A:
      for (int i = 1; i <= n; ++i) alphas.push_back(vec_sub(e(i), e(i + 1)));
      break;
    case RootType::B:
      for (int i = 1; i < n; ++i) alphas.push_back(vec_sub(e(i), e(i + 1)));
      alphas.push_back(e(n));
      break;
    case RootType::C:
      for (int i = 1; i < n; ++i) alphas.push_back(vec_sub(e(i), e(i + 1)));
      alphas.push_back(vec_scale(Rat(2), e(n)));
      break;
    case RootType::D:
      for (int i = 1; i < n; ++i) alphas.push_back(vec_sub(e(i), e(i + 1)));
      alphas.push_back(vec_add(e(n - 1), e(n)));
      break;
  }
  return alphas;
}

// unique solution of M^T c = e for the simple-root coefficient vector
std::vector<int> coords_on_simples(const std::vector<RatVec>& alphas, int ambient,
                                   const std::vector<int>& e_coords) {
  const int k = int(alphas.size());
  RatMat aug(ambient, k + 1);
  for (int j = 0; j < ambient; ++j) {
    for (int i = 0; i < k; ++i) aug.at(j, i) = alphas[i][j];
    aug.at(j, k) = Rat(e_coords[j]);
  }
  auto [r, rank] = rref(aug);
  std::vector<int> c(k, 0);
  for (int i = 0; i < rank; ++i) {
    int p = 0;
    while (p <= k && r.at(i, p) == 0) ++p;
    if (p == k) throw std::logic_error("vector outside the root lattice");
    Rat val = r.at(i, k);
    if (val.get_den() != 1) throw std::logic_error("non-integral simple coefficient");
    c[p] = int(val.get_num().get_si());
  }
  return c;
}

std::string e_name(const std::vector<int>& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    std::string term = "e" + std::to_string(i + 1);
    if (std::abs(e[i]) == 2) term = "2" + term;
    if (s.empty())
      s = (e[i] < 0 ? "-" : "") + term;
    else
      s += (e[i] < 0 ? "-" : "+") + term;
  }
  return s;
}

}  // namespace

RootSystem RootSystem::make(RootType type, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (type == RootType::D && n < 4) throw std::invalid_argument("type D needs n >= 4");
  if ((type == RootType::B || type == RootType::C) && n < 2)
    throw std::invalid_argument("types B and C need n >= 2");
  RootSystem rs;
  rs.type_ = type;
  rs.n_ = n;
  rs.ambient_ = (type == RootType::A) ? n + 1 : n;
  auto alphas = simple_roots_of(type, n, rs.ambient_);

  std::vector<std::vector<int>> e_list;
  auto pair_roots = [&](bool diffs, bool sums) {
    for (int i = 0; i < rs.ambient_; ++i)
      for (int j = i + 1; j < rs.ambient_; ++j) {
        std::vector<int> d(rs.ambient_, 0);
        if (diffs) {
          d[i] = 1;
          d[j] = -1;
          e_list.push_back(d);
        }
        if (sums) {
          std::vector<int> s(rs.ambient_, 0);
          s[i] = 1;
          s[j] = 1;
          e_list.push_back(s);
        }
      }
  };
  switch (type) {
    case RootType::A:
      pair_roots(true, false);
      break;
    case RootType::B:
      pair_roots(true, true);
      for (int i = 0; i < n; ++i) {
        std::vector<int> s(n, 0);
        s[i] = 1;
        e_list.push_back(s);
      }
      break;
    case RootType::C:
      pair_roots(true, true);
      for (int i = 0; i < n; ++i) {
        std::vector<int> s(n, 0);
        s[i] = 2;
        e_list.push_back(s);
      }
      break;
    case RootType::D:
      pair_roots(true, true);
      break;
  }

  for (auto& e : e_list) {
    Root r;
    r.e = e;
    r.simple = coords_on_simples(alphas, rs.ambient_, e);
    for (int c : r.simple) {
      if (c < 0) throw std::logic_error("negative simple coefficient for a positive root");
      r.height += c;
    }
    r.name = e_name(e);
    rs.roots_.push_back(std::move(r));
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.e < b.e;
  });
  return rs;
}

int RootSystem::find_e(const std::vector<int>& e) const {
  for (int i = 0; i < size(); ++i)
    if (roots_[i].e == e) return i;
  return -1;
}

std::vector<int> RootSystem::simple_combo_to_e(const std::vector<int>& coeffs) const {
  if (int(coeffs.size()) != n_) throw std::invalid_argument("coefficient vector has wrong length");
  auto alphas = simple_roots_of(type_, n_, ambient_);
  RatVec acc(ambient_, Rat(0));
  for (int i = 0; i < n_; ++i) acc = vec_add(acc, vec_scale(Rat(coeffs[i]), alphas[i]));
  std::vector<int> e(ambient_);
  for (int j = 0; j < ambient_; ++j) {
    if (acc[j].get_den() != 1) throw std::logic_error("non-integral e-coordinate");
    e[j] = int(acc[j].get_num().get_si());
  }
  return e;
}

int RootSystem::parse_root(const std::string& text) const {
  if (text.find(',') != std::string::npos) {
    std::vector<int> coeffs;
    size_t p = 0;
    while (p <= text.size()) {
      size_t q = text.find(',', p);
      if (q == std::string::npos) q = text.size();
      coeffs.push_back(std::stoi(text.substr(p, q - p)));
      p = q + 1;
    }
    int idx = find_e(simple_combo_to_e(coeffs));
    if (idx < 0) throw std::invalid_argument("not a positive root: " + text);
    return idx;
  }
  for (int i = 0; i < size(); ++i)
    if (roots_[i].name == text) return i;
  throw std::invalid_argument("cannot parse root: " + text);
}

bool RootSystem::leq(int alpha, int beta) const {
  const Root& a = roots_[alpha];
  const Root& b = roots_[beta];
  for (int i = 0; i < n_; ++i)
    if (b.simple[i] < a.simple[i]) return false;
  return true;
}

RootIdeal ideal_from_generators(const RootSystem& rs, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= rs.size()) throw std::invalid_argument("root index out of range");
  RootIdeal ideal;
  for (int r = 0; r < rs.size(); ++r) {
    for (int g : gens) {
      if (rs.leq(g, r)) {
        ideal.members.push_back(r);
        break;
      }
    }
  }
  for (int m : ideal.members) {
    bool minimal = true;
    for (int other : ideal.members)
      if (other != m && rs.leq(other, m)) {
        minimal = false;
        break;
      }
    if (minimal) ideal.generators.push_back(m);
  }
  return ideal;
}

Arrangement ideal_arrangement(const RootSystem& rs, const RootIdeal& ideal) {
  std::vector<bool> in(rs.size(), false);
  for (int m : ideal.members) in[m] = true;
  std::vector<RatVec> normals;
  std::vector<std::string> labels;
  for (int i = 0; i < rs.size(); ++i) {
    if (in[i]) continue;
    const Root& r = rs.root(i);
    RatVec v(rs.ambient_dim());
    for (int j = 0; j < rs.ambient_dim(); ++j) v[j] = Rat(r.e[j]);
    normals.push_back(std::move(v));
    labels.push_back(r.name);
  }
  return Arrangement(rs.ambient_dim(), std::move(normals), std::move(labels));
}

namespace {

int sum_root_index(const RootSystem& d, int i, int j) {  // e_i + e_j, 1-based
  std::vector<int> e(d.ambient_dim(), 0);
  e[i - 1] = 1;
  e[j - 1] = 1;
  int idx = d.find_e(e);
  if (idx < 0) throw std::logic_error("missing sum root");
  return idx;
}

}  // namespace

RootIdeal lemma_ideal_i(const RootSystem& d, int n) {
  if (d.type() != RootType::D || d.n() != n || n < 4)
    throw std::invalid_argument("family (i) needs the D_n root system, n >= 4");
  return ideal_from_generators(d, {sum_root_index(d, 1, n - 1)});
}

RootIdeal lemma_ideal_ii(const RootSystem& d, int n, int s, int t) {
  if (d.type() != RootType::D || d.n() != n || n < 5)
    throw std::invalid_argument("family (ii) needs the D_n root system, n >= 5");
  if (!(1 < s && s < t && t < n - 1))
    throw std::invalid_argument("family (ii) needs 1 < s < t < n-1");
  return ideal_from_generators(d, {sum_root_index(d, 1, n - 1), sum_root_index(d, s, t)});
}

Flat lemma_flat_y(const Arrangement& a, int n) {
  if (a.dim() != n) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<RatVec> basis;
  RatVec e1(n, Rat(0)), mid(n, Rat(0)), en(n, Rat(0));
  e1[0] = 1;
  en[n - 1] = 1;
  for (int i = 1; i < n - 1; ++i) mid[i] = 1;
  basis = {e1, mid, en};
  auto f = flat_of_subspace(a, Subspace::span(n, basis));
  if (!f) throw std::invalid_argument("Y is not a flat of this arrangement");
  return *f;
}

std::vector<std::string> lemma_restriction_keys() {
  std::vector<RatVec> normals = {
      {Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(0)},  {Rat(1), Rat(0), Rat(1)},
      {Rat(1), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(1)},  {Rat(0), Rat(1), Rat(-1)}};
  return Arrangement(3, normals).normal_keys();
}

namespace {

void ideal_dfs(const RootSystem& rs, int k, std::vector<int>& chosen,
               std::vector<RootIdeal>& out) {
  if (k == rs.size()) {
    RootIdeal ideal;
    ideal.members = chosen;
    for (int m : ideal.members) {
      bool minimal = true;
      for (int other : ideal.members)
        if (other != m && rs.leq(other, m)) {
          minimal = false;
          break;
        }
      if (minimal) ideal.generators.push_back(m);
    }
    out.push_back(std::move(ideal));
    return;
  }
  // roots are sorted by ascending height, so every strict predecessor of k
  // was already decided: k is forced into the ideal if one of them is in
  bool forced = false;
  for (int m : chosen)
    if (rs.leq(m, k)) {
      forced = true;
      break;
    }
  if (!forced) ideal_dfs(rs, k + 1, chosen, out);  // "out" branch first
  chosen.push_back(k);
  ideal_dfs(rs, k + 1, chosen, out);
  chosen.pop_back();
}

}  // namespace

std::vector<RootIdeal> enumerate_ideals(const RootSystem& rs, int bound) {
  if (rs.size() > bound)
    throw std::invalid_argument("enumerate_ideals: root system exceeds the bound");
  std::vector<RootIdeal> out;
  std::vector<int> chosen;
  ideal_dfs(rs, 0, chosen, out);
  return out;
}

}  // namespace arr
