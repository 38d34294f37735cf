#include "arr/lattice_iso.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "arr/lattice.hpp"

namespace arr {

namespace {

// Point-line incidence data: for each pair of hyperplanes, the size of the
// localization of their rank-2 closure ("how many hyperplanes through the
// line"), plus per-hyperplane degree signatures for pruning.
struct Incidence {
  std::vector<std::vector<int>> pair_mult;  // n x n, 0 on the diagonal
  std::vector<std::vector<int>> signature;  // sorted line sizes through i
};

Incidence incidence_of(const Arrangement& a, const IntersectionLattice& lat) {
  const int n = a.size();
  Incidence inc;
  inc.pair_mult.assign(n, std::vector<int>(n, 0));
  inc.signature.resize(n);
  for (int fi : lat.rank_stratum(2)) {
    const Flat& f = lat.flat(fi);
    for (size_t x = 0; x < f.loc.size(); ++x)
      for (size_t y = x + 1; y < f.loc.size(); ++y) {
        inc.pair_mult[f.loc[x]][f.loc[y]] = int(f.loc.size());
        inc.pair_mult[f.loc[y]][f.loc[x]] = int(f.loc.size());
      }
    for (int i : f.loc) inc.signature[i].push_back(int(f.loc.size()));
  }
  for (auto& s : inc.signature) std::sort(s.begin(), s.end());
  return inc;
}

// Full verification: sigma must send every localization set of a flat of a
// onto the localization set of a same-rank flat of b. Subset ranks are
// determined by the flats, so this certifies rank preservation on all of 2^A.
bool verify(const IntersectionLattice& la, const IntersectionLattice& lb,
            const std::vector<int>& sigma) {
  for (int r = 0; r <= la.top_rank(); ++r) {
    std::unordered_set<uint64_t> b_masks;
    for (int fi : lb.rank_stratum(r)) b_masks.insert(lb.flat(fi).loc_mask);
    for (int fi : la.rank_stratum(r)) {
      uint64_t m = 0;
      for (int i : la.flat(fi).loc) m |= uint64_t(1) << sigma[i];
      if (!b_masks.count(m)) return false;
    }
  }
  return true;
}

struct Search {
  const Incidence& ia;
  const Incidence& ib;
  const IntersectionLattice& la;
  const IntersectionLattice& lb;
  int n;
  std::vector<int> map_ab;  // a index -> b index, -1 unset
  std::vector<bool> used_b;
  std::vector<int> order;   // assignment order over a's hyperplanes

  bool consistent(int ai, int bi) const {
    if (ia.signature[ai] != ib.signature[bi]) return false;
    for (int aj = 0; aj < n; ++aj) {
      int bj = map_ab[aj];
      if (bj < 0 || aj == ai) continue;
      if (ia.pair_mult[ai][aj] != ib.pair_mult[bi][bj]) return false;
    }
    return true;
  }

  // The rank-2 pruning is strong but not complete, so candidates that pass
  // the search still face the flat-by-flat verification before acceptance.
  bool run(size_t depth) {
    if (depth == order.size()) return verify(la, lb, map_ab);
    int ai = order[depth];
    for (int bi = 0; bi < n; ++bi) {
      if (used_b[bi] || !consistent(ai, bi)) continue;
      map_ab[ai] = bi;
      used_b[bi] = true;
      if (run(depth + 1)) return true;
      map_ab[ai] = -1;
      used_b[bi] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> lattice_isomorphic(const Arrangement& a,
                                                   const Arrangement& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() == 0) return std::vector<int>{};
  auto la = build_lattice(a);
  auto lb = build_lattice(b);
  if (la.top_rank() != lb.top_rank()) return std::nullopt;
  for (int r = 0; r <= la.top_rank(); ++r)
    if (la.rank_stratum(r).size() != lb.rank_stratum(r).size()) return std::nullopt;

  Incidence ia = incidence_of(a, la);
  Incidence ib = incidence_of(b, lb);
  {
    auto sa = ia.signature;
    auto sb = ib.signature;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  Search s{ia,
           ib,
           la,
           lb,
           a.size(),
           std::vector<int>(a.size(), -1),
           std::vector<bool>(a.size(), false),
           {}};
  // most-constrained first: rarest signature, ties by index (deterministic)
  std::map<std::vector<int>, int> sig_count;
  for (int i = 0; i < a.size(); ++i) sig_count[ia.signature[i]]++;
  s.order.resize(a.size());
  for (int i = 0; i < a.size(); ++i) s.order[i] = i;
  std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    return sig_count[ia.signature[x]] < sig_count[ia.signature[y]];
  });

  if (s.run(0)) return s.map_ab;
  return std::nullopt;
}

}  // namespace arr
