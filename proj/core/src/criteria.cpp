#include "arr/criteria.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arr {

bool is_modular(const IntersectionLattice& lat, int x) {
  for (int y = 0; y < lat.size(); ++y) {
    int j = lat.join(x, y), m = lat.meet(x, y);
    if (lat.flat(x).rank + lat.flat(y).rank != lat.flat(j).rank + lat.flat(m).rank)
      return false;
  }
  return true;
}

std::optional<std::vector<int>> is_supersolvable(const IntersectionLattice& lat) {
  const int r = lat.top_rank();
  std::vector<int> modular_cache(lat.size(), -1);  // -1 unknown, 0 no, 1 yes
  auto modular = [&](int f) {
    if (modular_cache[f] < 0) modular_cache[f] = is_modular(lat, f) ? 1 : 0;
    return modular_cache[f] == 1;
  };

  std::vector<int> chain{lat.rank_stratum(0)[0]};
  // depth-first: extend by a covering modular flat until the top
  auto dfs = [&](auto&& self, int below) -> bool {
    if (lat.flat(below).rank == r) return true;
    for (int cand : lat.rank_stratum(lat.flat(below).rank + 1)) {
      if (!lat.leq(below, cand) || !modular(cand)) continue;
      chain.push_back(cand);
      if (self(self, cand)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (dfs(dfs, chain[0])) return chain;
  return std::nullopt;
}

namespace {

// any selection of one hyperplane from k distinct blocks must have rank k
bool blocks_independent(const Arrangement& a, const std::vector<std::vector<int>>& blocks) {
  const int r = int(blocks.size());
  // DFS over block subsets picking one element each, with incremental rank
  auto rec = [&](auto&& self, int bi, const EchelonBasis& basis) -> bool {
    if (bi == r) return true;
    if (!self(self, bi + 1, basis)) return false;  // skip this block
    for (int h : blocks[bi]) {
      EchelonBasis with = basis;
      if (!with.insert(a[h].normal)) return false;  // dependent transversal
      if (!self(self, bi + 1, with)) return false;
    }
    return true;
  };
  return rec(rec, 0, EchelonBasis(a.dim()));
}

bool singleton_condition(const IntersectionLattice& lat, const std::vector<int>& block_of) {
  for (const Flat& f : lat.flats()) {
    if (f.rank < 2) continue;
    std::map<int, int> count;
    for (int h : f.loc) count[block_of[h]]++;
    bool has_singleton = false;
    for (auto [b, c] : count)
      if (c == 1) has_singleton = true;
    if (!has_singleton) return false;
  }
  return true;
}

struct PartitionSearch {
  const Arrangement& a;
  const IntersectionLattice& lat;
  std::vector<int> sizes;       // target block sizes, descending
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;

  bool place(int h) {
    if (h == a.size()) {
      return blocks_independent(a, blocks) && singleton_condition(lat, block_of);
    }
    for (int b = 0; b < int(sizes.size()); ++b) {
      if (int(blocks[b].size()) == sizes[b]) continue;
      // symmetry break: equal-sized empty blocks are interchangeable
      if (b > 0 && blocks[b].empty() && blocks[b - 1].empty() && sizes[b] == sizes[b - 1])
        continue;
      blocks[b].push_back(h);
      block_of[h] = b;
      if (partial_ok(h) && place(h + 1)) return true;
      blocks[b].pop_back();
      block_of[h] = -1;
    }
    return false;
  }

  // incremental pruning: transversals through h using already placed
  // hyperplanes must stay independent
  bool partial_ok(int h) {
    std::vector<std::vector<int>> partial;
    for (int b = 0; b < int(blocks.size()); ++b) {
      if (b == block_of[h]) continue;
      if (!blocks[b].empty()) partial.push_back(blocks[b]);
    }
    auto rec = [&](auto&& self, size_t bi, EchelonBasis basis) -> bool {
      if (bi == partial.size()) return true;
      if (!self(self, bi + 1, basis)) return false;
      for (int other : partial[bi]) {
        EchelonBasis with = basis;
        if (!with.insert(a[other].normal)) return false;
        if (!self(self, bi + 1, with)) return false;
      }
      return true;
    };
    EchelonBasis seed(a.dim());
    seed.insert(a[h].normal);
    return rec(rec, 0, seed);
  }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> find_nice_partition(
    const Arrangement& a, const IntersectionLattice& lat, int bound) {
  if (a.size() > bound)
    throw std::invalid_argument("find_nice_partition: arrangement exceeds the bound");
  const int r = lat.top_rank();
  if (r == 0) return std::nullopt;

  // Terao: a nice partition forces pi(A,t) = prod(1 + |pi_i| t), so the block
  // sizes are the nonzero exponents; chi must split over the integers.
  Poly chi = charpoly(lat);
  auto split = split_rational_roots(chi);
  if (split.cofactor.degree() > 0) return std::nullopt;
  std::vector<long> sizes;
  for (const Rat& root : split.roots) {
    if (root.get_den() != 1 || root < 0) return std::nullopt;
    long v = root.get_num().get_si();
    if (v > 0) sizes.push_back(v);
  }
  if (int(sizes.size()) != r) return std::nullopt;
  long total = 0;
  for (long s : sizes) total += s;
  if (total != a.size()) return std::nullopt;

  std::sort(sizes.rbegin(), sizes.rend());
  PartitionSearch search{a, lat, std::vector<int>(sizes.begin(), sizes.end()),
                         std::vector<std::vector<int>>(r), std::vector<int>(a.size(), -1)};
  if (search.place(0)) return search.blocks;
  return std::nullopt;
}

FreeProbe free_probe(const Poly& chi) {
  auto split = split_rational_roots(chi);
  FreeProbe out;
  if (split.cofactor.degree() > 0) return out;  // irreducible factor of degree >= 2
  std::vector<long> exps;
  for (const Rat& root : split.roots) {
    if (root.get_den() != 1 || root < 0) return out;  // negative or fractional root
    exps.push_back(root.get_num().get_si());
  }
  std::sort(exps.begin(), exps.end());
  out.possibly_free = true;
  out.exponents = std::move(exps);
  return out;
}

}  // namespace arr
