#include "arr/scan.hpp"

#include <atomic>
#include <thread>

#include "arr/lattice_iso.hpp"
#include "arr/param.hpp"

namespace arr {

using nlohmann::json;

json scan_record_json(const ScanRecord& r) {
  json j;
  j["index"] = r.index;
  j["generators"] = r.generator_names;
  j["generator_simple_coords"] = r.generator_simple_coords;
  j["arrangement_size"] = r.arrangement_size;
  json rs = json::array();
  for (const auto& o : r.restrictions) {
    json oj;
    oj["flat_basis"] = o.flat_basis;
    oj["flat_rank"] = o.flat_rank;
    oj["restriction_rank"] = o.restriction_rank;
    if (o.certificate) {
      json cj;
      cj["realized"] = o.certificate->realized;
      cj["walls"] = o.certificate->walls;
      cj["vertex_flats"] = o.certificate->vertex_flat_bases;
      if (!o.certificate->signs.empty()) cj["signs"] = o.certificate->signs;
      oj["simple_triangle"] = cj;
    } else {
      oj["simple_triangle"] = nullptr;
    }
    rs.push_back(oj);
  }
  j["restrictions"] = rs;
  j["flagged"] = r.flagged;
  return j;
}

namespace {

// The three walls of the reference triangle, as indices into
// lemma_arrangement(): computed once from the realized witness of the
// negative-parameter member A(-2) and carried over its lattice bijection.
std::vector<int> reference_walls() {
  static const std::vector<int> walls = [] {
    ParamArrangement fam = lemma_family();
    Arrangement am2 = fam.at(Rat(-2));
    auto witness = find_simple_triangle(am2);
    if (!witness) throw std::logic_error("A(-2) lost its simple triangle");
    auto sigma = lattice_isomorphic(am2, lemma_arrangement());
    if (!sigma) throw std::logic_error("A(-2) and the lemma arrangement differ");
    std::vector<int> w;
    for (int i : witness->chamber.walls) w.push_back((*sigma)[i]);
    std::sort(w.begin(), w.end());
    return w;
  }();
  return walls;
}

std::vector<std::vector<std::string>> vertex_bases_of_walls(const Arrangement& ess,
                                                            const std::vector<int>& walls) {
  std::vector<std::vector<std::string>> bases;
  for (size_t x = 0; x < walls.size(); ++x)
    for (size_t y = x + 1; y < walls.size(); ++y) {
      Subspace line = Subspace::span(ess.dim(), {ess[walls[x]].normal})
                          .perp()
                          .intersect(Subspace::span(ess.dim(), {ess[walls[y]].normal}).perp());
      std::vector<std::string> rows;
      for (int r = 0; r < line.basis().rows(); ++r)
        rows.push_back(vec_str(line.basis().row(r)));
      bases.push_back(std::move(rows));
    }
  return bases;
}

std::optional<TriangleCertificate> certify_restriction(const Arrangement& ess) {
  // a triangle among just three hyperplanes is the Boolean cone: aspherical
  if (ess.size() >= 4) {
    if (auto w = find_simple_triangle(ess)) {
      TriangleCertificate cert;
      cert.realized = true;
      cert.walls = w->chamber.walls;
      cert.signs = w->chamber.signs;
      for (const auto& vf : w->vertex_flats) {
        Subspace line = vf.line;
        std::vector<std::string> rows;
        for (int r = 0; r < line.basis().rows(); ++r)
          rows.push_back(vec_str(line.basis().row(r)));
        cert.vertex_flat_bases.push_back(std::move(rows));
      }
      return cert;
    }
  }
  auto sigma = lattice_isomorphic(lemma_arrangement(), ess);
  if (!sigma) return std::nullopt;
  TriangleCertificate cert;
  cert.realized = false;
  for (int w : reference_walls()) cert.walls.push_back((*sigma)[w]);
  std::sort(cert.walls.begin(), cert.walls.end());
  cert.vertex_flat_bases = vertex_bases_of_walls(ess, cert.walls);
  return cert;
}

ScanRecord scan_one(const RootSystem& rs, int index, const RootIdeal& ideal) {
  ScanRecord rec;
  rec.index = index;
  for (int g : ideal.generators) {
    rec.generator_names.push_back(rs.root(g).name);
    rec.generator_simple_coords.push_back(rs.root(g).simple);
  }
  Arrangement a = ideal_arrangement(rs, ideal);
  rec.arrangement_size = a.size();
  if (a.size() == 0) return rec;

  const int n = a.dim();
  auto lat = build_lattice(a);
  const int want_rank = n - 3;  // dimension-3 flats
  if (want_rank < 0 || want_rank > lat.top_rank()) return rec;
  for (int fi : lat.rank_stratum(want_rank)) {
    const Flat& f = lat.flat(fi);
    if (f.subspace.dim() != 3) continue;
    RestrictionOutcome o;
    o.flat_rank = f.rank;
    for (int row = 0; row < f.subspace.basis().rows(); ++row)
      o.flat_basis.push_back(vec_str(f.subspace.basis().row(row)));
    auto res = restrict_to(a, f);
    o.restriction_rank = res.arrangement.rank();
    if (o.restriction_rank == 3) {
      auto ess = essentialize(res.arrangement);
      o.certificate = certify_restriction(ess.arrangement);
      if (o.certificate) rec.flagged = true;
    }
    rec.restrictions.push_back(std::move(o));
  }
  return rec;
}

}  // namespace

std::vector<ScanRecord> scan_simple_triangle_restrictions(
    const RootSystem& rs, int jobs, int ideal_bound,
    const std::optional<std::vector<int>>& only) {
  auto ideals = enumerate_ideals(rs, ideal_bound);
  std::vector<int> todo;
  if (only) {
    todo = *only;
  } else {
    todo.resize(ideals.size());
    for (size_t i = 0; i < ideals.size(); ++i) todo[i] = int(i);
  }
  reference_walls();  // settle the shared reference before fanning out
  std::vector<ScanRecord> records(todo.size());

  if (jobs <= 1) {
    for (size_t k = 0; k < todo.size(); ++k)
      records[k] = scan_one(rs, todo[k], ideals[todo[k]]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t k = next.fetch_add(1);
        if (k >= todo.size()) return;
        records[k] = scan_one(rs, todo[k], ideals[todo[k]]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

}  // namespace arr
