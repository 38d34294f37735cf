#include "arr/chambers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "arr/simplex.hpp"

namespace arr {

namespace {

void require_essential(const Arrangement& a, int rank_bound) {
  if (!a.is_essential())
    throw std::invalid_argument("chamber geometry needs an essential arrangement (essentialize first)");
  if (a.dim() > rank_bound)
    throw std::invalid_argument("rank bound exceeded for chamber enumeration");
  if (a.size() == 0)
    throw std::invalid_argument("chamber geometry needs at least one hyperplane");
}

}  // namespace

std::vector<ChamberCone> enumerate_chambers(const Arrangement& a, int rank_bound) {
  require_essential(a, rank_bound);
  const int n = a.size();

  struct Partial {
    std::string signs;
    RatVec witness;
  };
  std::vector<Partial> frontier{{std::string{}, {}}};

  for (int k = 0; k < n; ++k) {
    std::vector<Partial> next;
    next.reserve(frontier.size() + 8);
    for (auto& part : frontier) {
      // the side the witness already sits on survives without an LP
      int witness_side = 0;  // 0 unknown (first step), else +1/-1
      if (k > 0) {
        Rat val = dot(a[k].normal, part.witness);
        witness_side = val > 0 ? 1 : (val < 0 ? -1 : 0);
      }
      for (int side : {+1, -1}) {
        if (witness_side == side) {
          next.push_back({part.signs + (side > 0 ? '+' : '-'), part.witness});
          continue;
        }
        std::vector<RatVec> cons;
        cons.reserve(k + 1);
        for (int j = 0; j <= k; ++j) {
          RatVec c = a[j].normal;
          char sj = j < k ? part.signs[j] : (side > 0 ? '+' : '-');
          if (sj == '-')
            for (auto& x : c) x = -x;
          cons.push_back(std::move(c));
        }
        auto w = feasible_point(cons, {}, a.dim());
        if (w) next.push_back({part.signs + (side > 0 ? '+' : '-'), std::move(*w)});
      }
    }
    frontier = std::move(next);
  }

  std::sort(frontier.begin(), frontier.end(),
            [](const Partial& x, const Partial& y) { return x.signs < y.signs; });

  // walls by sign-flip adjacency
  std::unordered_set<std::string> sign_set;
  for (const auto& p : frontier) sign_set.insert(p.signs);
  std::vector<ChamberCone> out;
  out.reserve(frontier.size());
  for (auto& p : frontier) {
    ChamberCone c;
    c.signs = p.signs;
    c.witness = std::move(p.witness);
    for (int i = 0; i < n; ++i) {
      std::string flipped = p.signs;
      flipped[i] = flipped[i] == '+' ? '-' : '+';
      if (sign_set.count(flipped)) c.walls.push_back(i);
    }
    out.push_back(std::move(c));
  }
  return out;
}

long long zaslavsky_count(const Arrangement& a) {
  if (a.size() == 0) return 1;
  Poly chi = charpoly(build_lattice(a));
  Rat v = chi.eval(Rat(-1));
  Rat av = abs(v);
  return av.get_num().get_si();
}

SimplicialityReport is_simplicial(const Arrangement& a, int rank_bound) {
  auto chambers = enumerate_chambers(a, rank_bound);
  for (auto& c : chambers) {
    if (int(c.walls.size()) != a.dim()) {
      return {false, std::move(c)};
    }
  }
  return {true, std::nullopt};
}

namespace {

RatVec cross3(const RatVec& a, const RatVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::optional<TriangleWitness> find_simple_triangle(const Arrangement& a) {
  if (!a.is_essential() || a.dim() != 3)
    throw std::invalid_argument("find_simple_triangle needs an essential arrangement of rank 3");
  const int n = a.size();

  // rank-2 flats via pairwise closures: line key -> hyperplanes through it
  std::map<std::string, VertexFlat> lines;
  std::vector<std::vector<const VertexFlat*>> line_of(n, std::vector<const VertexFlat*>(n, nullptr));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RatVec d = cross3(a[i].normal, a[j].normal);
      // independent normals: d != 0 always (hyperplanes are distinct)
      RatVec dir = canonicalize_normal(d);
      std::string key = vec_str(dir);
      auto it = lines.find(key);
      if (it == lines.end()) {
        VertexFlat vf;
        vf.direction = dir;
        vf.line = Subspace::span(3, {dir});
        for (int m = 0; m < n; ++m)
          if (dot(a[m].normal, dir) == 0) vf.on.push_back(m);
        it = lines.emplace(key, std::move(vf)).first;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec dir = canonicalize_normal(cross3(a[i].normal, a[j].normal));
      line_of[i][j] = line_of[j][i] = &lines.at(vec_str(dir));
    }

  std::optional<TriangleWitness> best;
  auto consider = [&](const std::array<const VertexFlat*, 3>& vf,
                      const std::array<RatVec, 3>& rays) {
    // rays span the candidate open cone; other hyperplanes must not cross it
    std::string signs(n, '?');
    RatVec w(3, Rat(0));
    for (const auto& r : rays) w = vec_add(w, r);
    for (int m = 0; m < n; ++m) {
      int s0 = 0;
      bool ok = true;
      for (const auto& r : rays) {
        int s = rat_sign(dot(a[m].normal, r));
        if (s == 0) continue;  // m is a wall through this vertex
        if (s0 == 0)
          s0 = s;
        else if (s != s0) {
          ok = false;
          break;
        }
      }
      if (!ok) return;
      signs[m] = s0 > 0 ? '+' : '-';
    }
    if (best && best->chamber.signs <= signs) return;
    TriangleWitness tw;
    tw.chamber.signs = signs;
    tw.chamber.witness = w;
    tw.vertex_flats = {*vf[0], *vf[1], *vf[2]};
    for (int m = 0; m < n; ++m) {
      bool on_boundary = false;
      for (const auto& r : rays)
        if (dot(a[m].normal, r) == 0) on_boundary = true;
      if (on_boundary) tw.chamber.walls.push_back(m);
    }
    best = std::move(tw);
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const VertexFlat* vij = line_of[i][j];
      if (vij->on.size() != 2) continue;
      for (int k = j + 1; k < n; ++k) {
        const VertexFlat* vik = line_of[i][k];
        const VertexFlat* vjk = line_of[j][k];
        if (vik->on.size() != 2 || vjk->on.size() != 2) continue;
        // double points force the three lines to be pairwise distinct and
        // {i,j,k} to be independent
        const RatVec& dij = vij->direction;
        const RatVec& dik = vik->direction;
        const RatVec& djk = vjk->direction;
        // four antipodal-distinct orientation classes of the spanned cone
        for (int s1 : {+1, -1})
          for (int s2 : {+1, -1}) {
            std::array<RatVec, 3> rays = {vec_scale(Rat(1), dij),
                                          vec_scale(Rat(s1), dik),
                                          vec_scale(Rat(s2), djk)};
            consider({vij, vik, vjk}, rays);
            std::array<RatVec, 3> anti = {vec_scale(Rat(-1), rays[0]),
                                          vec_scale(Rat(-1), rays[1]),
                                          vec_scale(Rat(-1), rays[2])};
            consider({vij, vik, vjk}, anti);
          }
      }
    }
  }
  return best;
}

}  // namespace arr
