#include <set>

#include "doctest.h"

#include "arr/roots.hpp"
#include "helpers.hpp"

using namespace arr;

namespace {

std::vector<int> e_of(const RootSystem& rs, const std::string& name) {
  return rs.root(rs.parse_root(name)).e;
}

// Closure under root addition: if alpha in I, beta in Phi+, alpha+beta in
// Phi+, then alpha+beta in I. Independent of the poset comparison.
std::vector<int> addition_closure(const RootSystem& rs, std::vector<int> seed) {
  std::set<int> in(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(in.begin(), in.end());
    for (int a : cur) {
      for (int b = 0; b < rs.size(); ++b) {
        std::vector<int> sum(rs.ambient_dim());
        for (int j = 0; j < rs.ambient_dim(); ++j) sum[j] = rs.root(a).e[j] + rs.root(b).e[j];
        int idx = rs.find_e(sum);
        if (idx >= 0 && !in.count(idx)) {
          in.insert(idx);
          grew = true;
        }
      }
    }
  }
  return {in.begin(), in.end()};
}

// Brute force over all subsets: count the up-closed ones.
long brute_force_ideal_count(const RootSystem& rs) {
  const int m = rs.size();
  long count = 0;
  for (uint64_t s = 0; s < (uint64_t(1) << m); ++s) {
    bool closed = true;
    for (int a = 0; a < m && closed; ++a) {
      if (!(s & (uint64_t(1) << a))) continue;
      for (int b = 0; b < m && closed; ++b)
        if (rs.leq(a, b) && !(s & (uint64_t(1) << b))) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(RootSystem::make(RootType::D, 4).size() == 12);
  CHECK(RootSystem::make(RootType::D, 5).size() == 20);
  CHECK(RootSystem::make(RootType::A, 3).size() == 6);
  CHECK(RootSystem::make(RootType::B, 3).size() == 9);
  CHECK(RootSystem::make(RootType::C, 3).size() == 9);
  CHECK_THROWS_AS(RootSystem::make(RootType::D, 3), std::invalid_argument);
}

TEST_CASE("the D4 highest root is e1+e2 with coefficients (1,2,1,1)") {
  auto d4 = RootSystem::make(RootType::D, 4);
  int hi = d4.parse_root("e1+e2");
  CHECK(d4.root(hi).simple == std::vector<int>{1, 2, 1, 1});
  CHECK(d4.root(hi).height == 5);
  for (int i = 0; i < d4.size(); ++i) CHECK(d4.leq(i, hi));
  // the unique root of height 4 is e1+e3
  int count4 = 0;
  for (int i = 0; i < d4.size(); ++i)
    if (d4.root(i).height == 4) {
      ++count4;
      CHECK(d4.root(i).e == e_of(d4, "e1+e3"));
    }
  CHECK(count4 == 1);
}

TEST_CASE("poset comparisons in D4") {
  auto d4 = RootSystem::make(RootType::D, 4);
  int a = d4.parse_root("e1+e3"), b = d4.parse_root("e1+e2");
  CHECK(d4.leq(a, a));
  CHECK(d4.leq(a, b));
  CHECK_FALSE(d4.leq(b, a));
  int diff = d4.parse_root("e1-e2"), sum = d4.parse_root("e3+e4");
  CHECK_FALSE(d4.leq(diff, sum));
  CHECK_FALSE(d4.leq(sum, diff));
}

TEST_CASE("parsing accepts both syntaxes") {
  auto d5 = RootSystem::make(RootType::D, 5);
  CHECK(d5.parse_root("0,1,2,1,1") == d5.parse_root("e2+e3"));
  CHECK_THROWS_AS(d5.parse_root("e1+e1"), std::invalid_argument);
  CHECK_THROWS_AS(d5.parse_root("2,0,0,0,0"), std::invalid_argument);
}

TEST_CASE("label conversion oracle: the D5 table in simple-root coefficients") {
  auto d5 = RootSystem::make(RootType::D, 5);
  auto check = [&](std::vector<int> coeffs, const std::string& name) {
    CHECK(d5.simple_combo_to_e(coeffs) == e_of(d5, name));
  };
  check({1, 1, 1, 1, 1}, "e1+e4");
  check({0, 1, 2, 1, 1}, "e2+e3");
  check({0, 1, 1, 1, 1}, "e2+e4");
  check({1, 0, 0, 0, 0}, "e1-e2");
  check({1, 1, 0, 0, 0}, "e1-e3");
  check({1, 1, 1, 0, 0}, "e1-e4");
  check({1, 1, 1, 1, 0}, "e1-e5");
  check({1, 1, 1, 0, 1}, "e1+e5");
}

TEST_CASE("ideals from generators") {
  auto d4 = RootSystem::make(RootType::D, 4);
  SUBCASE("empty ideal gives the full Weyl arrangement") {
    RootIdeal empty = ideal_from_generators(d4, {});
    CHECK(empty.members.empty());
    CHECK(ideal_arrangement(d4, empty).size() == 12);
  }
  SUBCASE("generated by e1+e3: the two highest roots") {
    RootIdeal i = ideal_from_generators(d4, {d4.parse_root("e1+e3")});
    CHECK(i.members.size() == 2);
    std::set<std::string> names;
    for (int m : i.members) names.insert(d4.root(m).name);
    CHECK(names == std::set<std::string>{"e1+e2", "e1+e3"});
    CHECK(ideal_arrangement(d4, i).size() == 10);
  }
  SUBCASE("generated by the highest root alone") {
    RootIdeal i = ideal_from_generators(d4, {d4.parse_root("e1+e2")});
    CHECK(i.members.size() == 1);
    CHECK(ideal_arrangement(d4, i).size() == 11);
  }
  SUBCASE("non-antichain generators are minimized") {
    RootIdeal i = ideal_from_generators(
        d4, {d4.parse_root("e1+e3"), d4.parse_root("e1+e2")});
    CHECK(i.generators.size() == 1);
    CHECK(d4.root(i.generators[0]).name == "e1+e3");
  }
}

TEST_CASE("ideal properties on random generator sets") {
  for (auto [type, n] : std::vector<std::pair<RootType, int>>{
           {RootType::D, 4}, {RootType::D, 5}, {RootType::A, 3}, {RootType::B, 3},
           {RootType::C, 3}}) {
    auto rs = RootSystem::make(type, n);
    arrtest::Rng rng(101 + n + int(type));
    for (int it = 0; it < 20; ++it) {
      std::vector<int> gens;
      for (int g = 0, cnt = rng.uniform(0, 3); g < cnt; ++g)
        gens.push_back(rng.uniform(0, rs.size() - 1));
      RootIdeal ideal = ideal_from_generators(rs, gens);

      // the two closure definitions agree
      CHECK(ideal.members == addition_closure(rs, gens));

      // regenerating from the computed generators is idempotent
      RootIdeal again = ideal_from_generators(rs, ideal.generators);
      CHECK(again.members == ideal.members);
      CHECK(again.generators == ideal.generators);

      // generators form an antichain
      for (int x : ideal.generators)
        for (int y : ideal.generators)
          if (x != y) CHECK_FALSE(rs.leq(x, y));

      // |A_I| + |I| = number of positive roots
      CHECK(ideal_arrangement(rs, ideal).size() + int(ideal.members.size()) == rs.size());
    }
  }
}

TEST_CASE("lemma ideals") {
  SUBCASE("family (i) in D4 is the two-highest-roots ideal") {
    auto d4 = RootSystem::make(RootType::D, 4);
    RootIdeal i = lemma_ideal_i(d4, 4);
    CHECK(i.members.size() == 2);
    CHECK(d4.root(i.generators[0]).name == "e1+e3");
  }
  SUBCASE("family (i) in D5") {
    auto d5 = RootSystem::make(RootType::D, 5);
    RootIdeal i = lemma_ideal_i(d5, 5);
    REQUIRE(i.generators.size() == 1);
    CHECK(d5.root(i.generators[0]).name == "e1+e4");
  }
  SUBCASE("family (ii) in D5 with s=2, t=3") {
    auto d5 = RootSystem::make(RootType::D, 5);
    RootIdeal i = lemma_ideal_ii(d5, 5, 2, 3);
    REQUIRE(i.generators.size() == 2);
    std::set<std::string> names;
    for (int g : i.generators) names.insert(d5.root(g).name);
    CHECK(names == std::set<std::string>{"e1+e4", "e2+e3"});
  }
  SUBCASE("parameter constraints") {
    auto d5 = RootSystem::make(RootType::D, 5);
    CHECK_THROWS_AS(lemma_ideal_ii(d5, 5, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(lemma_ideal_ii(d5, 5, 2, 4), std::invalid_argument);
  }
}

TEST_CASE("the flat Y") {
  SUBCASE("n=4: a hyperplane") {
    auto d4 = RootSystem::make(RootType::D, 4);
    Arrangement a = ideal_arrangement(d4, lemma_ideal_i(d4, 4));
    Flat y = lemma_flat_y(a, 4);
    CHECK(y.rank == 1);
    CHECK(y.subspace.dim() == 3);
  }
  SUBCASE("n=5 and n=6: codimension n-3") {
    for (int n : {5, 6}) {
      auto d = RootSystem::make(RootType::D, n);
      Arrangement a = ideal_arrangement(d, lemma_ideal_i(d, n));
      Flat y = lemma_flat_y(a, n);
      CHECK(y.rank == n - 3);
      CHECK(y.subspace.dim() == 3);
    }
  }
  SUBCASE("not a flat when the diagonal hyperplanes are missing") {
    // boolean arrangement does not contain ker(x2-x3)
    CHECK_THROWS_AS(lemma_flat_y(arrtest::boolean_arr(4), 4), std::invalid_argument);
  }
}

TEST_CASE("lemma restriction identity for all n and all legal (s,t)") {
  auto target = lemma_restriction_keys();
  for (int n = 4; n <= 8; ++n) {
    auto d = RootSystem::make(RootType::D, n);
    {
      Arrangement a = ideal_arrangement(d, lemma_ideal_i(d, n));
      auto res = restrict_to(a, lemma_flat_y(a, n));
      CHECK(res.arrangement.normal_keys() == target);
    }
    for (int s = 2; s < n - 1; ++s)
      for (int t = s + 1; t < n - 1; ++t) {
        Arrangement a = ideal_arrangement(d, lemma_ideal_ii(d, n, s, t));
        auto res = restrict_to(a, lemma_flat_y(a, n));
        CHECK(res.arrangement.normal_keys() == target);
      }
  }
}

TEST_CASE("ideal enumeration") {
  SUBCASE("D4: 50 ideals, pinned by brute force") {
    auto d4 = RootSystem::make(RootType::D, 4);
    auto ideals = enumerate_ideals(d4);
    CHECK(ideals.size() == 50);
    CHECK(brute_force_ideal_count(d4) == 50);
    CHECK(ideals.front().members.empty());
    CHECK(int(ideals.back().members.size()) == d4.size());
  }
  SUBCASE("D5: 182 ideals, pinned by brute force") {
    auto d5 = RootSystem::make(RootType::D, 5);
    auto ideals = enumerate_ideals(d5);
    CHECK(ideals.size() == 182);
    CHECK(brute_force_ideal_count(d5) == 182);
    // all distinct
    std::set<std::vector<int>> seen;
    for (const auto& i : ideals) seen.insert(i.members);
    CHECK(seen.size() == ideals.size());
  }
  SUBCASE("small classical sanity: A2 -> 5, B2 -> 6") {
    CHECK(enumerate_ideals(RootSystem::make(RootType::A, 2)).size() == 5);
    CHECK(brute_force_ideal_count(RootSystem::make(RootType::A, 2)) == 5);
    CHECK(enumerate_ideals(RootSystem::make(RootType::B, 2)).size() == 6);
  }
  SUBCASE("bound is enforced") {
    CHECK_THROWS_AS(enumerate_ideals(RootSystem::make(RootType::D, 7), 40),
                    std::invalid_argument);
  }
}
