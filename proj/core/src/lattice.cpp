#include "arr/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arr {

std::optional<Flat> flat_of_subspace(const Arrangement& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) return std::nullopt;
  Flat f;
  f.subspace = s;
  std::vector<RatVec> loc_normals;
  for (int i = 0; i < a.size(); ++i) {
    // H contains s iff the normal annihilates every basis row of s
    bool contains = true;
    for (int r = 0; r < s.basis().rows() && contains; ++r)
      contains = (dot(a[i].normal, s.basis().row(r)) == 0);
    if (contains) {
      f.loc.push_back(i);
      f.loc_mask |= uint64_t(1) << i;
      loc_normals.push_back(a[i].normal);
    }
  }
  f.normal_space = Subspace::span(a.dim(), loc_normals);
  f.rank = s.codim();
  // genuine lattice element: the hyperplanes through s must cut out s exactly
  if (f.normal_space.dim() != f.rank) return std::nullopt;
  return f;
}

namespace {

Flat make_flat_from_normal_space(const Arrangement& a, const Subspace& nspace) {
  Flat f;
  f.normal_space = nspace;
  f.subspace = nspace.perp();
  f.rank = nspace.dim();
  for (int i = 0; i < a.size(); ++i) {
    if (nspace.contains_vec(a[i].normal)) {
      f.loc.push_back(i);
      f.loc_mask |= uint64_t(1) << i;
    }
  }
  return f;
}

}  // namespace

IntersectionLattice build_lattice(const Arrangement& a) {
  if (a.size() > 64) throw std::invalid_argument("build_lattice: more than 64 hyperplanes");
  IntersectionLattice lat;
  lat.a_ = &a;

  // Rank-by-rank frontier: extend every rank-k flat by every hyperplane off
  // it; RREF normal spans canonicalize, an ordered map dedupes per level.
  std::vector<std::vector<Subspace>> strata;
  strata.push_back({Subspace::zero(a.dim())});  // V: empty normal span
  while (true) {
    std::map<std::string, Subspace> next;
    for (const Subspace& ns : strata.back()) {
      for (int i = 0; i < a.size(); ++i) {
        if (ns.contains_vec(a[i].normal)) continue;
        Subspace bigger = ns.sum(Subspace::span(a.dim(), {a[i].normal}));
        next.emplace(bigger.key(), bigger);
      }
    }
    if (next.empty()) break;
    std::vector<Subspace> level;
    level.reserve(next.size());
    for (auto& [k, v] : next) level.push_back(std::move(v));
    strata.push_back(std::move(level));
  }

  lat.by_rank_.resize(strata.size());
  for (int r = 0; r < int(strata.size()); ++r) {
    for (const Subspace& ns : strata[r]) {
      int idx = int(lat.flats_.size());
      lat.by_rank_[r].push_back(idx);
      lat.flats_.push_back(make_flat_from_normal_space(a, ns));
      lat.index_.emplace(lat.flats_.back().key(), idx);
    }
  }

  // Moebius, top-down from V: mu(V) = 1, mu(X) = -sum_{Y < X} mu(Y).
  // Flats are rank-ordered, so every Y < X is already done.
  const int n = lat.size();
  for (int x = 0; x < n; ++x) {
    if (lat.flats_[x].rank == 0) {
      lat.flats_[x].moebius = 1;
      continue;
    }
    long long s = 0;
    for (int y = 0; y < n; ++y) {
      if (lat.flats_[y].rank >= lat.flats_[x].rank) continue;
      if (lat.leq(y, x)) s += lat.flats_[y].moebius;
    }
    lat.flats_[x].moebius = -s;
  }
  return lat;
}

int IntersectionLattice::find_by_key(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

int IntersectionLattice::find_flat_of(const Subspace& subspace) const {
  for (int i = 0; i < size(); ++i)
    if (flats_[i].subspace == subspace) return i;
  return -1;
}

int IntersectionLattice::closure_of(uint64_t mask) const {
  int best = -1;
  for (int i = 0; i < size(); ++i) {
    if ((mask & ~flats_[i].loc_mask) != 0) continue;
    if (best < 0 || flats_[i].rank < flats_[best].rank) best = i;
  }
  if (best < 0) throw std::logic_error("closure_of: no covering flat");
  return best;
}

int IntersectionLattice::join(int x, int y) const {
  return closure_of(flats_[x].loc_mask | flats_[y].loc_mask);
}

int IntersectionLattice::meet(int x, int y) const {
  return closure_of(flats_[x].loc_mask & flats_[y].loc_mask);
}

Poly charpoly(const IntersectionLattice& lat) {
  std::vector<Rat> coeffs(lat.arrangement().dim() + 1, Rat(0));
  for (const Flat& f : lat.flats())
    coeffs[lat.arrangement().dim() - f.rank] += Rat(long(f.moebius));
  return Poly(std::move(coeffs));
}

namespace {

void whitney_dfs(const Arrangement& a, int i, int sign, const EchelonBasis& basis,
                 std::vector<long long>& acc) {
  if (i == a.size()) {
    acc[a.dim() - basis.rank()] += sign;
    return;
  }
  whitney_dfs(a, i + 1, sign, basis, acc);
  EchelonBasis with = basis;
  with.insert(a[i].normal);
  whitney_dfs(a, i + 1, -sign, with, acc);
}

}  // namespace

Poly whitney_charpoly(const Arrangement& a, int bound) {
  if (a.size() > bound)
    throw std::invalid_argument("whitney_charpoly: arrangement exceeds subset-scan bound");
  std::vector<long long> acc(a.dim() + 1, 0);
  whitney_dfs(a, 0, 1, EchelonBasis(a.dim()), acc);
  std::vector<Rat> coeffs(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) coeffs[i] = Rat(long(acc[i]));
  return Poly(std::move(coeffs));
}

namespace {

void check_flat(const Arrangement& a, const Flat& x) {
  auto recomputed = flat_of_subspace(a, x.subspace);
  if (!recomputed || recomputed->loc != x.loc)
    throw std::invalid_argument("flat does not belong to this arrangement's lattice");
}

}  // namespace

Arrangement localize(const Arrangement& a, const Flat& x) {
  check_flat(a, x);
  std::vector<RatVec> normals;
  std::vector<std::string> labels;
  for (int i : x.loc) {
    normals.push_back(a[i].normal);
    labels.push_back(a[i].label);
  }
  return Arrangement(a.dim(), std::move(normals), std::move(labels));
}

Restriction restrict_to(const Arrangement& a, const Flat& x) {
  check_flat(a, x);
  if (x.rank < 1) throw std::invalid_argument("restrict: flat must have rank >= 1");
  const RatMat& chart = x.subspace.basis();  // d rows spanning X
  const int d = chart.rows();
  // trace of ker(alpha): in chart coordinates the normal is chart * alpha
  std::vector<std::string> order;  // first-seen trace order
  std::map<std::string, std::pair<RatVec, std::vector<std::string>>> traces;
  std::vector<bool> in_loc(a.size(), false);
  for (int i : x.loc) in_loc[i] = true;
  for (int i = 0; i < a.size(); ++i) {
    if (in_loc[i]) continue;
    RatVec t = mat_vec(chart, a[i].normal);
    RatVec c = canonicalize_normal(t);  // nonzero since H does not contain X
    std::string k = vec_str(c);
    auto it = traces.find(k);
    std::string parent = a[i].label.empty() ? ("#" + std::to_string(i)) : a[i].label;
    if (it == traces.end()) {
      traces.emplace(k, std::make_pair(c, std::vector<std::string>{parent}));
      order.push_back(k);
    } else {
      it->second.second.push_back(parent);
    }
  }
  std::vector<RatVec> normals;
  std::vector<std::string> labels;
  for (const std::string& k : order) {
    auto& [vec, parents] = traces.at(k);
    normals.push_back(vec);
    std::string lbl = parents[0];
    for (size_t i = 1; i < parents.size(); ++i) lbl += "|" + parents[i];
    labels.push_back(lbl);
  }
  return {Arrangement(d, std::move(normals), std::move(labels)), chart};
}

}  // namespace arr
