#include <array>
#include <set>

#include <doctest.h>

#include "fixtures.hpp"
#include "quartic/cone.hpp"
#include "quartic/weyl.hpp"

using namespace quartic;
using lattice::Vec8;

TEST_SUITE_BEGIN("cone");

TEST_CASE("clique census reproduces the face counts") {
  const auto census = cone::clique_census(fixtures::dp());
  CHECK(census.count[0] == 1);
  const std::array<std::uint64_t, 7> want{56, 756, 4032, 10080, 12096, 6048, 576};
  for (int k = 1; k <= 7; ++k) CHECK(census.count[k] == want[k - 1]);
  // Two routes to the 7A1 rays.
  CHECK(census.count[7] == weyl::count_disjoint_seven_tuples(fixtures::dp()));
}

TEST_CASE("126 fiber classes with 6 reducible pairs and 12 distinct lifts each") {
  const auto& dp = fixtures::dp();
  const auto configs = cone::six_a1_tilde_configs(dp);
  REQUIRE(configs.size() == 126);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    CHECK(configs[i].fiber == dp.F.members[i]);
    std::set<int> lifts;
    for (const auto& [a, b] : configs[i].pairs) {
      CHECK(dp.L.pairing_table[a][b] == 1);
      Vec8 sum;
      for (int k = 0; k < 8; ++k) sum[k] = dp.L.members[a][k] + dp.L.members[b][k];
      CHECK(sum == configs[i].fiber);
      lifts.insert(a);
      lifts.insert(b);
    }
    CHECK(lifts.size() == 12);
  }
}

TEST_CASE("the pair system is iota-equivariant") {
  const auto& dp = fixtures::dp();
  const auto configs = cone::six_a1_tilde_configs(dp);
  for (std::size_t i = 0; i < configs.size(); i += 7) {
    const Vec8 partner = dp.lat.iota(configs[i].fiber);
    const int j = dp.F.index_of(partner);
    REQUIRE(j >= 0);
    std::set<std::pair<int, int>> image, expect;
    for (const auto& [a, b] : configs[i].pairs) {
      const int ia = dp.L.index_of(dp.lat.iota(dp.L.members[a]));
      const int ib = dp.L.index_of(dp.lat.iota(dp.L.members[b]));
      image.insert({std::min(ia, ib), std::max(ia, ib)});
    }
    for (const auto& [a, b] : configs[j].pairs) expect.insert({a, b});
    CHECK(image == expect);
  }
}

TEST_CASE("low-degree root strata") {
  const auto& dp = fixtures::dp();
  CHECK(cone::low_degree_root_check(dp));
  CHECK(lattice::enumerate_vectors(dp.lat, 1, -1) == dp.L.members);
  CHECK(lattice::enumerate_vectors(dp.lat, 2, -1).empty());
}

TEST_CASE("disjointness is generator-invariant, so clique counts are too") {
  const auto& dp = fixtures::dp();
  for (const auto& r : fixtures::roots()) {
    for (int i = 0; i < 56; ++i) {
      const Vec8 vi = r.apply(dp.lat, dp.L.members[i]);
      CHECK(dp.L.contains(vi));
      for (int j = i + 1; j < 56; ++j) {
        const Vec8 vj = r.apply(dp.lat, dp.L.members[j]);
        CHECK((dp.L.pairing_table[i][j] == 0) == (dp.lat.pair(vi, vj) == 0));
      }
    }
  }
}

TEST_SUITE_END();
