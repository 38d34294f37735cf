// Acceptance suite: one pass/fail line per criterion, wall-clock timed.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "arr/chambers.hpp"
#include "arr/criteria.hpp"
#include "arr/lattice_iso.hpp"
#include "arr/param.hpp"
#include "arr/reproduce.hpp"
#include "arr/scan.hpp"

using namespace arr;

namespace {

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

int failures = 0;

template <typename F>
void run(int number, const char* title, double budget, F&& body) {
  Criterion c{number, title, budget};
  auto start = std::chrono::steady_clock::now();
  body(c);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget) {
    c.ok = false;
    c.notes.push_back("time budget exceeded");
  }
  std::printf("%s criterion %d: %s [%.2fs / %.0fs]\n", c.ok ? "PASS" : "FAIL", number,
              title, secs, budget);
  for (const auto& n : c.notes) std::printf("       - %s\n", n.c_str());
  if (!c.ok) ++failures;
}

void absorb(Criterion& c, const ReproduceResult& r) {
  for (const auto& line : r.lines)
    c.require(line.ok, r.target + ": " + line.name +
                           (line.detail.empty() ? "" : " [" + line.detail + "]"));
}

Poly pin(std::initializer_list<long> ascending) {
  std::vector<Rat> coeffs;
  for (long x : ascending) coeffs.push_back(Rat(x));
  return Poly(std::move(coeffs));
}

Arrangement weyl(RootType type, int n) {
  auto rs = RootSystem::make(type, n);
  return ideal_arrangement(rs, ideal_from_generators(rs, {}));
}

Flat hyperplane_flat(const Arrangement& a, int i) {
  auto f = flat_of_subspace(a, Subspace::span(a.dim(), {a[i].normal}).perp());
  if (!f) throw std::logic_error("hyperplane flat missing");
  return *f;
}

// deterministic random corpus
struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }
  Rat rat() { return make_rat(uniform(-3, 3), uniform(1, 2)); }
  RatVec nonzero_vec(int dim) {
    for (;;) {
      RatVec v(dim);
      bool nz = false;
      for (auto& x : v) {
        x = rat();
        if (x != 0) nz = true;
      }
      if (nz) return v;
    }
  }
  Arrangement arrangement(int dim, int max_h) {
    int n = uniform(1, max_h);
    std::vector<RatVec> normals;
    for (int i = 0; i < n; ++i) normals.push_back(nonzero_vec(dim));
    return Arrangement(dim, normals);
  }
  RatMat invertible(int n) {
    for (;;) {
      RatMat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rat();
      if (det(m) != 0) return m;
    }
  }
};

}  // namespace

int main() {
  run(1, "family analysis pipeline (map, exceptional set, triangle, isomorphy)", 5.0,
      [](Criterion& c) { absorb(c, reproduce_lemma21()); });

  run(2, "rank-3 restrictions of both ideal families for n=4..8", 30.0, [](Criterion& c) {
    auto target = lemma_restriction_keys();
    bool all_keys = true, any_raw_triangle_missing = false, all_iso = true;
    for (int n = 4; n <= 8; ++n) {
      auto d = RootSystem::make(RootType::D, n);
      std::vector<RootIdeal> ideals = {lemma_ideal_i(d, n)};
      for (int s = 2; s < n - 1; ++s)
        for (int t = s + 1; t < n - 1; ++t) ideals.push_back(lemma_ideal_ii(d, n, s, t));
      for (const auto& ideal : ideals) {
        Arrangement a = ideal_arrangement(d, ideal);
        auto res = restrict_to(a, lemma_flat_y(a, n));
        if (res.arrangement.normal_keys() != target) all_keys = false;
        auto ess = essentialize(res.arrangement);
        if (!find_simple_triangle(ess.arrangement)) any_raw_triangle_missing = true;
        if (!lattice_isomorphic(ess.arrangement, lemma_arrangement())) all_iso = false;
      }
    }
    c.require(all_keys, "every restriction equals (x1-x2)x2(x1^2-xn^2)(x2^2-xn^2)");
    c.require(!any_raw_triangle_missing,
              "find_simple_triangle returns a witness on the restriction (as stated)");
    if (any_raw_triangle_missing) {
      c.note("the restriction is the positive-parameter member of the family: its own");
      c.note("picture has no simple triangle (pinned by enumeration; the module contract");
      c.note("pins none for t in {1,2,3}); the triangle lives at negative parameters");
      c.note("of the same lattice, e.g. the shaded cell of the t=-2 member");
      c.note(std::string("corrected check: restriction lattice-isomorphic to the ") +
             (all_iso ? "triangle-certified reference: holds for every n, s, t"
                      : "triangle-certified reference: FAILS too"));
    }
  });

  run(3, "the 10-hyperplane ideal arrangement and its hyperplane restriction", 10.0,
      [](Criterion& c) { absorb(c, reproduce_ex32()); });

  run(4, "scan of the 182 ideals: exactly 8 flagged", 300.0, [](Criterion& c) {
    absorb(c, reproduce_ex34(2));
    c.note("the flagged family is closed under the x5 -> -x5 automorphism, which");
    c.note("pairs {e2+e4, e1-e5} with {e2+e4, e1+e5}; the nearby set {e2+e4, e1-e2}");
    c.note("spans a rank-4 arrangement and has no rank-3 restriction on a");
    c.note("dimension-3 flat, so it cannot appear");
  });

  run(5, "the 11-hyperplane ideal arrangement: factored restrictions only", 120.0,
      [](Criterion& c) { absorb(c, reproduce_ex35()); });

  run(6, "localization-restriction commutation in D6/D7", 30.0, [](Criterion& c) {
    absorb(c, reproduce_ex33(6, 2));
    absorb(c, reproduce_ex33(6, 3));
    absorb(c, reproduce_ex33(7, 2));
    absorb(c, reproduce_ex33(7, 3));
    absorb(c, reproduce_ex33(7, 4));
    absorb(c, reproduce_ex33(6, 2, {{3, 4}}));
    absorb(c, reproduce_ex33(7, 2, {{3, 4}}));
    absorb(c, reproduce_ex33(7, 3, {{4, 5}}));
  });

  run(7, "characteristic polynomial probes", 5.0, [](Criterion& c) {
    Poly chi_lemma = charpoly(build_lattice(lemma_arrangement()));
    c.require(chi_lemma == pin({-7, 12, -6, 1}), "chi of the lemma arrangement");
    c.require(!free_probe(chi_lemma).possibly_free, "lemma arrangement probes not-free");
    Poly chi_d4 = charpoly(build_lattice(weyl(RootType::D, 4)));
    Poly expected = pin({-1, 1}) * pin({-3, 1}) * pin({-3, 1}) * pin({-5, 1});
    c.require(chi_d4 == expected, "chi of the D4 reflection arrangement");
    auto probe = free_probe(chi_d4);
    c.require(probe.possibly_free && probe.exponents == std::vector<long>{1, 3, 3, 5},
              "D4 probes possibly-free with exponents {1,3,3,5}");
  });

  run(8, "property suites over the corpus", 300.0, [](Criterion& c) {
    std::vector<Arrangement> corpus;
    Rng rng(1789);
    for (int i = 0; i < 200; ++i) corpus.push_back(rng.arrangement(rng.uniform(2, 4), 10));
    corpus.push_back(weyl(RootType::A, 3));
    corpus.push_back(weyl(RootType::B, 3));
    corpus.push_back(weyl(RootType::D, 4));
    {
      auto d4 = RootSystem::make(RootType::D, 4);
      for (const auto& ideal : enumerate_ideals(d4))
        if (int(ideal.members.size()) < d4.size())
          corpus.push_back(ideal_arrangement(d4, ideal));
      auto d5 = RootSystem::make(RootType::D, 5);
      auto ideals5 = enumerate_ideals(d5);
      for (size_t i = 0; i < ideals5.size(); i += 16)
        if (int(ideals5[i].members.size()) < d5.size())
          corpus.push_back(ideal_arrangement(d5, ideals5[i]));
    }

    bool whitney_ok = true, delres_ok = true, chambers_ok = true, factored_ok = true,
         heredity_ok = true, invariance_ok = true;
    int chamber_checked = 0, supersolvable_seen = 0;
    for (const auto& a : corpus) {
      if (a.size() == 0) continue;
      auto lat = build_lattice(a);
      Poly chi = charpoly(lat);
      if (chi != whitney_charpoly(a, 20)) whitney_ok = false;

      // deletion-restriction on the first hyperplane (all of them for small a)
      int dr_count = a.size() <= 8 ? a.size() : 1;
      for (int h = 0; h < dr_count; ++h) {
        Arrangement del = a.deleted(h);
        auto res = restrict_to(a, hyperplane_flat(a, h));
        Poly chi_del =
            del.size() > 0 ? charpoly(build_lattice(del)) : pin({0, 1}) * Poly();
        if (del.size() == 0) {
          std::vector<Rat> cs(a.dim() + 1, Rat(0));
          cs[a.dim()] = 1;
          chi_del = Poly(std::move(cs));
        }
        Poly chi_res;
        if (res.arrangement.size() == 0) {
          std::vector<Rat> cs(a.dim(), Rat(0));
          cs[a.dim() - 1] = 1;
          chi_res = Poly(std::move(cs));
        } else {
          chi_res = charpoly(build_lattice(res.arrangement));
        }
        if (chi != chi_del - chi_res) delres_ok = false;
      }

      // chamber count against the zaslavsky figure
      if (a.size() <= 14) {
        auto ess = essentialize(a);
        if (ess.arrangement.rank() <= 5) {
          if ((long long)enumerate_chambers(ess.arrangement).size() !=
              zaslavsky_count(ess.arrangement))
            chambers_ok = false;
          ++chamber_checked;
        }
      }

      // supersolvable => factored, and hereditary under restrictions
      auto chain = is_supersolvable(lat);
      if (chain) {
        ++supersolvable_seen;
        if (a.size() <= 14 && !find_nice_partition(a, lat).has_value()) factored_ok = false;
        for (int h = 0; h < a.size(); ++h) {
          auto res = restrict_to(a, hyperplane_flat(a, h));
          if (res.arrangement.size() == 0) continue;
          if (!is_supersolvable(build_lattice(res.arrangement)).has_value())
            heredity_ok = false;
        }
      }
    }

    // lattice invariance of chi and the probe under random invertible maps
    Rng rng2(2025);
    for (int i = 0; i < 40; ++i) {
      Arrangement a = rng2.arrangement(rng2.uniform(2, 4), 8);
      if (a.size() == 0) continue;
      Arrangement b = apply_linear_map(a, rng2.invertible(a.dim()));
      Poly ca = charpoly(build_lattice(a));
      Poly cb = charpoly(build_lattice(b));
      if (ca != cb) invariance_ok = false;
      if (free_probe(ca).possibly_free != free_probe(cb).possibly_free ||
          free_probe(ca).exponents != free_probe(cb).exponents)
        invariance_ok = false;
    }
    // D5 reflection arrangement: the 1920 chambers match |chi(-1)|
    {
      Arrangement d5 = weyl(RootType::D, 5);
      if ((long long)enumerate_chambers(d5).size() != zaslavsky_count(d5))
        chambers_ok = false;
      ++chamber_checked;
    }

    c.require(whitney_ok, "charpoly = whitney_charpoly on the corpus");
    c.require(delres_ok, "deletion-restriction identity");
    c.require(chambers_ok, "chamber count = |chi(-1)| on essential instances");
    c.require(factored_ok, "supersolvable implies factored");
    c.require(heredity_ok, "supersolvable implies supersolvable restrictions");
    c.require(invariance_ok, "chi and the probe are lattice invariants");
    c.require(chamber_checked > 100, "enough essential instances were exercised");
    c.require(supersolvable_seen > 10, "enough supersolvable instances were exercised");
  });

  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
