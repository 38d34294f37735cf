#include <set>

#include "doctest.h"

#include "arr/reproduce.hpp"
#include "arr/scan.hpp"

using namespace arr;

TEST_CASE("D4 scan flags the first-example ideal and nothing else") {
  auto d4 = RootSystem::make(RootType::D, 4);
  auto records = scan_simple_triangle_restrictions(d4);
  CHECK(records.size() == 50);

  std::set<std::set<std::string>> flagged;
  for (const auto& r : records)
    if (r.flagged)
      flagged.insert(std::set<std::string>(r.generator_names.begin(),
                                           r.generator_names.end()));
  CHECK(flagged == std::set<std::set<std::string>>{{"e1+e3"}});
  CHECK(flagged.count({"e1+e2"}) == 0);

  // the certificate on the flagged ideal is the lattice transport, not a
  // triangle of the restriction's own picture
  for (const auto& r : records) {
    if (!r.flagged) continue;
    for (const auto& o : r.restrictions) {
      if (!o.certificate) continue;
      CHECK_FALSE(o.certificate->realized);
      CHECK(o.certificate->walls.size() == 3);
      CHECK(o.certificate->vertex_flat_bases.size() == 3);
    }
  }

  // the empty ideal (full Weyl arrangement) is first and must not be flagged:
  // reflection arrangements have no simple triangle anywhere
  CHECK(records.front().generator_names.empty());
  CHECK(records.front().arrangement_size == 12);
  CHECK_FALSE(records.front().flagged);
  // the full ideal (empty arrangement) is last
  CHECK(records.back().arrangement_size == 0);
  CHECK_FALSE(records.back().flagged);
}

TEST_CASE("parallel scan output matches the sequential one") {
  auto d4 = RootSystem::make(RootType::D, 4);
  auto seq = scan_simple_triangle_restrictions(d4, 1);
  auto par = scan_simple_triangle_restrictions(d4, 2);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i)
    CHECK(scan_record_json(seq[i]) == scan_record_json(par[i]));
}

TEST_CASE("scan subsets allow resumption by ideal index") {
  auto d4 = RootSystem::make(RootType::D, 4);
  std::vector<int> only = {3, 17, 42};
  auto part = scan_simple_triangle_restrictions(d4, 1, 40, only);
  REQUIRE(part.size() == 3);
  CHECK(part[0].index == 3);
  CHECK(part[1].index == 17);
  CHECK(part[2].index == 42);
}

TEST_CASE("reproduction targets pass") {
  for (auto result : {reproduce_lemma21(), reproduce_ex32(), reproduce_ex35(),
                      reproduce_lemma31(4), reproduce_ex33(6, 3)}) {
    INFO(result.target);
    for (const auto& line : result.lines) {
      INFO(line.name, " ", line.detail);
      CHECK(line.ok);
    }
  }
}
