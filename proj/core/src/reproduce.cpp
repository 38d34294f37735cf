#include "arr/reproduce.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arr/chambers.hpp"
#include "arr/criteria.hpp"
#include "arr/lattice_iso.hpp"
#include "arr/param.hpp"
#include "arr/roots.hpp"
#include "arr/scan.hpp"

namespace arr {

namespace {

void add(ReproduceResult& r, const std::string& name, bool ok, std::string detail = "") {
  r.lines.push_back({name, ok, std::move(detail)});
}

std::string join_keys(const std::vector<std::string>& keys) {
  std::string s;
  for (const auto& k : keys) s += "(" + k + ") ";
  return s;
}

Flat hyperplane_flat(const Arrangement& a, int i) {
  auto f = flat_of_subspace(a, Subspace::span(a.dim(), {a[i].normal}).perp());
  if (!f) throw std::logic_error("hyperplane is not a flat of its own arrangement");
  return *f;
}

}  // namespace

ReproduceResult reproduce_lemma21() {
  ReproduceResult out{"lemma2.1", {}};
  ParamArrangement fam = lemma_family();

  // (a) the coordinate change maps A(1) onto the announced arrangement
  Arrangement target = lemma_arrangement();
  RatMat t_map = RatMat::from_rows(
      {{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}, {Rat(0), Rat(1), Rat(1)}}, 3);
  Arrangement image = apply_linear_map(fam.at(Rat(1)), t_map);
  add(out, "coordinate change maps A(1) onto y(x-y)(x^2-z^2)(y^2-z^2)",
      image.normal_keys() == target.normal_keys(), join_keys(image.normal_keys()));

  // (b) the family degenerates exactly at 0 and -1
  auto ex = exceptional_parameters(fam);
  add(out, "exceptional parameters of A(t) are exactly {0, -1}",
      ex.values == std::set<Rat>{Rat(-1), Rat(0)} && !ex.has_nonrational);

  // (c) A(-2) carries a simple triangle with three double vertices
  auto witness = find_simple_triangle(fam.at(Rat(-2)));
  bool simple = witness.has_value();
  if (simple)
    for (const auto& vf : witness->vertex_flats) simple = simple && vf.on.size() == 2;
  add(out, "A(-2) has a simple triangle (three double-point vertices)", simple,
      witness ? witness->chamber.signs : "none");

  // (d) A(1) and A(-2) are combinatorially isomorphic
  add(out, "L(A(1)) = L(A(-2)) up to a hyperplane bijection",
      lattice_isomorphic(fam.at(Rat(1)), fam.at(Rat(-2))).has_value());

  // (e) sampled members of the family all share the lattice
  std::vector<Rat> samples = {Rat(1), Rat(2), make_rat(-1, 2), Rat(3), Rat(-3)};
  bool all_iso = true;
  for (size_t i = 0; i < samples.size() && all_iso; ++i)
    for (size_t j = i + 1; j < samples.size() && all_iso; ++j)
      all_iso = lattice_isomorphic(fam.at(samples[i]), fam.at(samples[j])).has_value();
  add(out, "A(t1) = A(t2) combinatorially for sampled t in {1, 2, -1/2, 3, -3}", all_iso);
  return out;
}

ReproduceResult reproduce_lemma31(int n) {
  ReproduceResult out{"lemma3.1 n=" + std::to_string(n), {}};
  auto d = RootSystem::make(RootType::D, n);
  auto target = lemma_restriction_keys();

  auto check_family = [&](const RootIdeal& ideal, const std::string& tag) {
    Arrangement a = ideal_arrangement(d, ideal);
    Flat y = lemma_flat_y(a, n);
    auto res = restrict_to(a, y);
    bool keys_ok = res.arrangement.normal_keys() == target;
    add(out, tag + ": restriction to Y is (x1-x2)x2(x1^2-xn^2)(x2^2-xn^2)", keys_ok,
        join_keys(res.arrangement.normal_keys()));
    // The restriction itself realizes the positive-parameter member of the
    // family, whose picture has no triangle; the obstruction is that its
    // lattice is the one carrying a simple triangle at negative parameters.
    auto ess = essentialize(res.arrangement);
    bool iso = ess.arrangement.dim() == 3 &&
               lattice_isomorphic(ess.arrangement, lemma_arrangement()).has_value();
    add(out, tag + ": the restriction has the simple-triangle lattice", iso);
  };

  check_family(lemma_ideal_i(d, n), "(i)");
  for (int s = 2; s < n - 1; ++s)
    for (int t = s + 1; t < n - 1; ++t)
      check_family(lemma_ideal_ii(d, n, s, t),
                   "(ii) s=" + std::to_string(s) + " t=" + std::to_string(t));
  return out;
}

ReproduceResult reproduce_ex32() {
  ReproduceResult out{"ex3.2", {}};
  auto d4 = RootSystem::make(RootType::D, 4);
  RootIdeal ideal = lemma_ideal_i(d4, 4);
  Arrangement a = ideal_arrangement(d4, ideal);
  add(out, "the ideal removes the two highest roots: |A_I| = 10", a.size() == 10,
      std::to_string(a.size()));

  Flat h = lemma_flat_y(a, 4);
  auto res = restrict_to(a, h);
  add(out, "restriction to ker(x2-x3) is y(x-y)(x^2-z^2)(y^2-z^2)",
      res.arrangement.normal_keys() == lemma_restriction_keys(),
      join_keys(res.arrangement.normal_keys()));

  auto lat = build_lattice(a);
  add(out, "A_I is not supersolvable", !is_supersolvable(lat).has_value());
  auto ess = essentialize(a);
  add(out, "A_I is not simplicial", !is_simplicial(ess.arrangement).simplicial);
  return out;
}

ReproduceResult reproduce_ex33(int n, int r, std::optional<std::pair<int, int>> st) {
  std::ostringstream tag;
  tag << "ex3.3 n=" << n << " r=" << r;
  if (st) tag << " s=" << st->first << " t=" << st->second;
  ReproduceResult out{tag.str(), {}};
  if (!(1 < r && r <= n - 3)) {
    add(out, "parameters satisfy 1 < r <= n-3", false);
    return out;
  }
  const int m = n - r + 1;
  auto d = RootSystem::make(RootType::D, n);

  std::vector<int> gens;
  {
    std::vector<int> e(n, 0);
    e[r - 1] = 1;
    e[n - 2] = 1;
    gens.push_back(d.find_e(e));  // e_r + e_{n-1}
  }
  if (st) {
    auto [s, t] = *st;
    if (!(r < s && s < t && t < n - 1)) {
      add(out, "parameters satisfy r < s < t < n-1", false);
      return out;
    }
    std::vector<int> e(n, 0);
    e[s - 1] = 1;
    e[t - 1] = 1;
    gens.push_back(d.find_e(e));
  }
  RootIdeal ideal = ideal_from_generators(d, gens);
  add(out, "e_r+e_{n-1} is a generator of the ideal",
      std::find(ideal.generators.begin(), ideal.generators.end(), gens[0]) !=
          ideal.generators.end());
  Arrangement b = ideal_arrangement(d, ideal);

  // X = {x_r = ... = x_n = 0}: the center of the standard D_m subsystem
  std::vector<RatVec> x_basis;
  for (int i = 0; i < r - 1; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    x_basis.push_back(e);
  }
  auto x_flat = flat_of_subspace(b, Subspace::span(n, x_basis));
  add(out, "X lies in L(B)", x_flat.has_value());
  if (!x_flat) return out;
  add(out, "localization B_X has rank m = n-r+1",
      localize(b, *x_flat).rank() == m);

  // the localization is the D_m ideal-type arrangement on coordinates r..n:
  // essentializing projects onto exactly those coordinates
  auto dm_early = RootSystem::make(RootType::D, m);
  RootIdeal dm_ideal_early =
      st ? lemma_ideal_ii(dm_early, m, st->first - r + 1, st->second - r + 1)
         : lemma_ideal_i(dm_early, m);
  add(out, "B_X essentializes to the matching D_m ideal arrangement",
      essentialize(localize(b, *x_flat)).arrangement.normal_keys() ==
          ideal_arrangement(dm_early, dm_ideal_early).normal_keys());

  // Y = {x_{r+1} = ... = x_{n-1}} as a flat of B
  std::vector<RatVec> y_basis;
  for (int i = 0; i < r; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    y_basis.push_back(e);
  }
  {
    RatVec mid(n, Rat(0));
    for (int i = r; i < n - 1; ++i) mid[i] = 1;
    y_basis.push_back(mid);
    RatVec en(n, Rat(0));
    en[n - 1] = 1;
    y_basis.push_back(en);
  }
  Subspace y_sub = Subspace::span(n, y_basis);
  auto y_flat_b = flat_of_subspace(b, y_sub);
  add(out, "Y lies in L(B)", y_flat_b.has_value());
  if (!y_flat_b) return out;

  // (B_X)^Y
  Arrangement bx = localize(b, *x_flat);
  auto y_flat_bx = flat_of_subspace(bx, y_sub);
  add(out, "Y lies in L(B_X)", y_flat_bx.has_value());
  if (!y_flat_bx) return out;
  auto r1 = restrict_to(bx, *y_flat_bx);

  // (B^Y)_X: restrict first, then localize at the image of X in the chart
  auto r2 = restrict_to(b, *y_flat_b);
  std::vector<RatVec> x_in_chart;
  for (int i = 0; i < r - 1; ++i) {
    RatVec e(r + 2, Rat(0));
    e[i] = 1;
    x_in_chart.push_back(e);
  }
  auto x_image = flat_of_subspace(r2.arrangement, Subspace::span(r + 2, x_in_chart));
  add(out, "X (in chart coordinates) lies in L(B^Y)", x_image.has_value());
  if (!x_image) return out;
  Arrangement by_x = localize(r2.arrangement, *x_image);

  add(out, "(B^Y)_X = (B_X)^Y as canonical normal sets",
      by_x.normal_keys() == r1.arrangement.normal_keys(),
      join_keys(by_x.normal_keys()) + "vs " + join_keys(r1.arrangement.normal_keys()));

  // the localized restriction matches the rank-3 construction in D_m
  Arrangement am = ideal_arrangement(dm_early, dm_ideal_early);
  auto res_m = restrict_to(am, lemma_flat_y(am, m));
  add(out, "(B_X)^Y is lattice-isomorphic to the D_m lemma restriction",
      lattice_isomorphic(r1.arrangement, res_m.arrangement).has_value());
  return out;
}

ReproduceResult reproduce_ex34(int jobs) {
  ReproduceResult out{"ex3.4", {}};
  auto d5 = RootSystem::make(RootType::D, 5);
  auto records = scan_simple_triangle_restrictions(d5, jobs);
  add(out, "the scan enumerates 182 ideals", records.size() == 182,
      std::to_string(records.size()));

  std::set<std::set<std::string>> flagged;
  for (const auto& rec : records)
    if (rec.flagged)
      flagged.insert(std::set<std::string>(rec.generator_names.begin(),
                                           rec.generator_names.end()));
  // Two nearby generator sets are easy to mix up here. The flagged family
  // is closed under the linear automorphism x5 -> -x5 (it permutes the
  // positive roots and preserves the poset), which pairs {e2+e4, e1-e5}
  // with {e2+e4, e1+e5}. The set {e2+e4, e1-e2}, by contrast, spans an
  // arrangement of rank 4: none of its dimension-3 flats yields a rank-3
  // restriction, so a dimension-3 scan can never flag it.
  const std::set<std::set<std::string>> expected = {
      {"e1+e4"},
      {"e1+e4", "e2+e3"},
      {"e2+e4"},
      {"e2+e4", "e1-e3"},
      {"e2+e4", "e1-e4"},
      {"e2+e4", "e1-e5"},
      {"e2+e4", "e1+e5"},
      {"e2+e4", "e1+e5", "e1-e5"},
  };
  add(out, "exactly 8 ideals have a rank-3 restriction with a simple triangle",
      flagged.size() == 8, std::to_string(flagged.size()));
  add(out, "the flagged generator sets match the symmetry-corrected table",
      flagged == expected);
  return out;
}

ReproduceResult reproduce_ex35() {
  ReproduceResult out{"ex3.5", {}};
  auto d4 = RootSystem::make(RootType::D, 4);
  RootIdeal ideal = ideal_from_generators(d4, {d4.parse_root("e1+e2")});
  Arrangement a = ideal_arrangement(d4, ideal);
  add(out, "removing the highest root leaves 11 hyperplanes", a.size() == 11,
      std::to_string(a.size()));

  auto lat = build_lattice(a);
  add(out, "A_I is not supersolvable", !is_supersolvable(lat).has_value());
  add(out, "A_I is not simplicial",
      !is_simplicial(essentialize(a).arrangement).simplicial);

  bool all_factored = true;
  bool any_triangle = false;
  bool any_triangle_lattice = false;
  for (int i = 0; i < a.size(); ++i) {
    auto res = restrict_to(a, hyperplane_flat(a, i));
    auto rlat = build_lattice(res.arrangement);
    if (!find_nice_partition(res.arrangement, rlat).has_value()) all_factored = false;
    auto ess = essentialize(res.arrangement);
    if (ess.arrangement.dim() == 3) {
      if (find_simple_triangle(ess.arrangement)) any_triangle = true;
      if (lattice_isomorphic(ess.arrangement, lemma_arrangement())) any_triangle_lattice = true;
    }
  }
  add(out, "every hyperplane restriction is factored", all_factored);
  add(out, "no hyperplane restriction carries a simple triangle", !any_triangle);
  add(out, "no hyperplane restriction has the simple-triangle lattice", !any_triangle_lattice);
  return out;
}

}  // namespace arr
