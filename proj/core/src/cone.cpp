#include "quartic/cone.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "quartic/errors.hpp"

namespace quartic::cone {

using lattice::DelPezzo;
using lattice::Vec8;

CliqueCensus clique_census(const DelPezzo& dp, int max_k) {
  const int n = dp.L.size();
  std::vector<std::uint64_t> orth(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && dp.L.pairing_table[i][j] == 0) orth[i] |= std::uint64_t{1} << j;

  CliqueCensus census;
  census.count[0] = 1;  // the empty clique
  // Vertex-ordered extension: every clique is counted once, extended only
  // by higher-numbered common neighbours.
  auto extend = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (size == max_k) return;
    std::uint64_t rest = cand;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      ++census.count[size + 1];
      const std::uint64_t mask = ~((std::uint64_t{2} << v) - 1);  // vertices > v
      self(self, cand & orth[v] & mask, size + 1);
    }
  };
  extend(extend, (~std::uint64_t{0}) >> (64 - n), 0);
  return census;
}

std::vector<FiberReducibleMembers> six_a1_tilde_configs(const DelPezzo& dp) {
  std::vector<FiberReducibleMembers> out;
  out.reserve(dp.F.size());
  std::set<std::set<int>> twelve_sets;

  for (const Vec8& v : dp.F.members) {
    FiberReducibleMembers fm;
    fm.fiber = v;
    int found = 0;
    std::set<int> lifts;
    for (int i = 0; i < dp.L.size(); ++i) {
      Vec8 other;
      for (int k = 0; k < 8; ++k) other[k] = v[k] - dp.L.members[i][k];
      const int j = dp.L.index_of(other);
      if (j <= i) continue;  // j > i dedups the pair; j == i cannot pair to 1
      if (dp.L.pairing_table[i][j] != 1) continue;
      if (found == 6) throw InternalError("six_a1_tilde: more than 6 pairs for a fiber class");
      fm.pairs[found++] = {static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};
      lifts.insert(i);
      lifts.insert(j);
    }
    if (found != 6 || lifts.size() != 12)
      throw InternalError("six_a1_tilde: expected 6 pairs with 12 distinct lifts, found " +
                          std::to_string(found) + " pairs, " + std::to_string(lifts.size()) +
                          " lifts");
    // Dual-graph shape: pairing 1 inside a pair, 0 across pairs.
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int x : {fm.pairs[a].first, fm.pairs[a].second})
          for (int y : {fm.pairs[b].first, fm.pairs[b].second})
            if (dp.L.pairing_table[x][y] != 0)
              throw InternalError("six_a1_tilde: lifts from different pairs are not orthogonal");
    twelve_sets.insert(lifts);
    out.push_back(fm);
  }
  if (out.size() != 126 || twelve_sets.size() != 126)
    throw InternalError("six_a1_tilde: expected 126 distinct configurations");
  return out;
}

bool low_degree_root_check(const DelPezzo& dp) {
  const auto degree1 = lattice::enumerate_vectors(dp.lat, 1, -1);
  const auto degree2 = lattice::enumerate_vectors(dp.lat, 2, -1);
  return degree1 == dp.L.members && degree2.empty();
}

}  // namespace quartic::cone
