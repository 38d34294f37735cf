#include "arr/report.hpp"

#include <cstdlib>

#include "arr/criteria.hpp"

namespace arr {

using nlohmann::json;

Bounds bounds_from_env() {
  Bounds b;
  if (const char* env = std::getenv("ARR_MAX_HYPERPLANES")) {
    int v = std::atoi(env);
    if (v > 0) {
      b.whitney = v;
      b.nice_partition = v;
      b.ideal_enumeration = v;
    }
  }
  return b;
}

const std::set<std::string> kAllChecks = {
    "lattice",   "charpoly",        "supersolvable", "simplicial",
    "generic",   "simple-triangle", "factored",      "free-probe"};

json triangle_json(const TriangleWitness& w) {
  json j;
  j["signs"] = w.chamber.signs;
  j["walls"] = w.chamber.walls;
  json flats = json::array();
  for (const auto& vf : w.vertex_flats) {
    json f;
    json dir = json::array();
    for (const auto& x : vf.direction) dir.push_back(rat_str(x));
    f["direction"] = dir;
    f["on"] = vf.on;
    flats.push_back(f);
  }
  j["vertex_flats"] = flats;
  return j;
}

json charpoly_json(const Poly& chi) {
  json j;
  json coeffs = json::array();
  for (const auto& c : chi.coeffs()) coeffs.push_back(rat_str(c));
  j["coefficients_ascending"] = coeffs;
  j["text"] = chi.str();
  return j;
}

json criteria_report(const Arrangement& a, const std::set<std::string>& checks,
                     const Bounds& bounds) {
  for (const auto& c : checks)
    if (!kAllChecks.count(c)) throw std::invalid_argument("unknown check: " + c);

  json out;
  std::vector<std::string> skipped;
  out["hyperplanes"] = a.size();
  out["dim"] = a.dim();
  out["rank"] = a.rank();

  const bool need_lattice = checks.count("lattice") || checks.count("charpoly") ||
                            checks.count("supersolvable") || checks.count("factored") ||
                            checks.count("free-probe");
  std::optional<IntersectionLattice> lat;
  if (need_lattice && a.size() > 0) lat.emplace(build_lattice(a));

  if (checks.count("lattice")) {
    if (!lat) {
      json lj;
      lj["flats_by_rank"] = json::array({1});
      out["lattice"] = lj;
    } else {
      json lj;
      json strata = json::array();
      for (int r = 0; r <= lat->top_rank(); ++r)
        strata.push_back(int(lat->rank_stratum(r).size()));
      lj["flats_by_rank"] = strata;
      out["lattice"] = lj;
    }
  }

  Poly chi;
  if (lat)
    chi = charpoly(*lat);
  else {
    std::vector<Rat> c(a.dim() + 1, Rat(0));
    c[a.dim()] = 1;
    chi = Poly(std::move(c));
  }
  if (checks.count("charpoly")) out["charpoly"] = charpoly_json(chi);

  if (checks.count("generic")) out["generic"] = is_generic(a);

  if (checks.count("supersolvable")) {
    if (!lat)
      out["supersolvable"] = true;  // the empty arrangement: trivial chain {V}
    else
      out["supersolvable"] = is_supersolvable(*lat).has_value();
  }

  if (checks.count("free-probe")) {
    auto probe = free_probe(chi);
    out["free_probe"] = probe.possibly_free ? "possibly-free" : "not-free";
    if (probe.possibly_free)
      out["exponents"] = probe.exponents;
    else
      out["exponents"] = nullptr;
  }

  if (checks.count("factored")) {
    if (!lat || a.size() > bounds.nice_partition) {
      out["factored"] = nullptr;
      skipped.push_back("factored");
    } else {
      auto blocks = find_nice_partition(a, *lat, bounds.nice_partition);
      out["factored"] = blocks.has_value();
      if (blocks) {
        json bj = json::array();
        for (const auto& b : *blocks) bj.push_back(b);
        out["nice_partition"] = bj;
      }
    }
  }

  if (checks.count("simplicial")) {
    if (a.size() == 0 || a.rank() > bounds.chamber_rank) {
      out["simplicial"] = nullptr;
      skipped.push_back("simplicial");
    } else {
      auto ess = essentialize(a);
      out["simplicial"] = is_simplicial(ess.arrangement, bounds.chamber_rank).simplicial;
    }
  }

  if (checks.count("simple-triangle")) {
    if (a.rank() != 3) {
      out["simple_triangle"] = nullptr;
      skipped.push_back("simple-triangle");
    } else {
      auto ess = essentialize(a);
      auto w = find_simple_triangle(ess.arrangement);
      out["simple_triangle"] = w ? triangle_json(*w) : json(nullptr);
    }
  }

  out["skipped"] = skipped;
  return out;
}

}  // namespace arr
