#include <algorithm>
#include <set>

#include <doctest.h>

#include "fixtures.hpp"
#include "quartic/lattice.hpp"

using namespace quartic::lattice;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("build_lattice fixes gram, h and the sign convention") {
  const Lattice lat = build_lattice();
  CHECK(lat.pair(lat.h, lat.h) == 2);
  CHECK(lat.h == Vec8{3, 1, 1, 1, 1, 1, 1, 1});
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(lat.gram[i][j] == (i != j ? 0 : i == 0 ? 1 : -1));

  const Vec8 e1{0, 1, 0, 0, 0, 0, 0, 0};
  CHECK(lat.pair(e1, e1) == -1);
  // With h = (3,1,...,1) the basis vector e1 pairs to -1 against h; the
  // exceptional class in L over this slot is -e1.
  CHECK(lat.pair(e1, lat.h) == -1);
  CHECK(lat.pair(Vec8{0, -1, 0, 0, 0, 0, 0, 0}, lat.h) == 1);
}

TEST_CASE("enumerate_L: 56 lifts with the published pairing structure") {
  const auto& dp = fixtures::dp();
  CHECK(dp.L.size() == 56);
  CHECK(dp.L.contains(Vec8{0, -1, 0, 0, 0, 0, 0, 0}));
  for (const Vec8& v : dp.L.members) {
    CHECK(dp.lat.pair(v, dp.lat.h) == 1);
    CHECK(dp.lat.norm(v) == -1);
    CHECK(dp.lat.pair(v, dp.lat.iota(v)) == 2);
  }
  std::set<long long> pairings;
  for (int i = 0; i < 56; ++i)
    for (int j = 0; j < 56; ++j)
      if (i != j) pairings.insert(dp.L.pairing_table[i][j]);
  CHECK(pairings == std::set<long long>{0, 1, 2});
}

TEST_CASE("enumerate_F: 126 primitive fiber classes") {
  const auto& dp = fixtures::dp();
  CHECK(dp.F.size() == 126);
  CHECK(dp.F.contains(Vec8{1, 1, 0, 0, 0, 0, 0, 0}));
  for (const Vec8& v : dp.F.members) {
    CHECK(dp.lat.pair(v, dp.lat.h) == 2);
    CHECK(dp.lat.norm(v) == 0);
    CHECK(dp.lat.pair(v, dp.lat.iota(v)) == 4);
  }
}

TEST_CASE("iota is a fixed-point-free involution over L and F, fixing h") {
  const auto& dp = fixtures::dp();
  CHECK(dp.lat.iota(dp.lat.h) == dp.lat.h);
  for (const auto* set : {&dp.L, &dp.F}) {
    for (const Vec8& v : set->members) {
      const Vec8 w = dp.lat.iota(v);
      CHECK(w != v);
      CHECK(dp.lat.iota(w) == v);
      CHECK(set->contains(w));
    }
  }
  // <v,h> = 1 forces iota(v) = h - v.
  for (const Vec8& v : dp.L.members) {
    Vec8 hv;
    for (int i = 0; i < 8; ++i) hv[i] = dp.lat.h[i] - v[i];
    CHECK(dp.lat.iota(v) == hv);
  }
}

TEST_CASE("canonical_order yields 28 + 63 classes and rejects bad input") {
  const auto& dp = fixtures::dp();
  CHECK(canonical_order(dp.lat, dp.L.members).class_reps.size() == 28);
  CHECK(canonical_order(dp.lat, dp.F.members).class_reps.size() == 63);
  for (const Vec8& rep : dp.Lbar.members) CHECK(rep < dp.lat.iota(rep));

  auto dup = dp.L.members;
  dup.push_back(dup.front());
  CHECK_THROWS_AS(canonical_order(dp.lat, dup), std::invalid_argument);

  auto open = dp.L.members;
  open.pop_back();
  CHECK_THROWS_AS(canonical_order(dp.lat, open), std::invalid_argument);
}

TEST_CASE("lift-pairing multisets of class pairs") {
  const auto& dp = fixtures::dp();
  // Lines: {a, 1-a} with a in {0,1}.
  for (int i = 0; i < 28; ++i)
    for (int j = i + 1; j < 28; ++j) {
      const auto x = dp.lat.pair(dp.Lbar.members[i], dp.Lbar.members[j]);
      const auto y = dp.lat.pair(dp.Lbar.members[i], dp.lat.iota(dp.Lbar.members[j]));
      CHECK(x + y == 1);
      CHECK(std::min(x, y) == 0);
    }
  // Families: {a, 4-a} with a in {0,1,2}.
  for (int i = 0; i < 63; ++i)
    for (int j = i + 1; j < 63; ++j) {
      const auto x = dp.lat.pair(dp.Fbar.members[i], dp.Fbar.members[j]);
      const auto y = dp.lat.pair(dp.Fbar.members[i], dp.lat.iota(dp.Fbar.members[j]));
      CHECK(x + y == 4);
      CHECK(std::min(x, y) >= 0);
      CHECK(std::min(x, y) <= 2);
    }
}

TEST_CASE("project_to_sigma is exact") {
  const auto& dp = fixtures::dp();
  const auto zero = project_to_sigma(dp.lat, dp.lat.h);
  for (const auto& c : zero) CHECK(c == Rational(0));
  for (const Vec8& v : dp.L.members) {
    const auto p = project_to_sigma(dp.lat, v);
    CHECK(pair(dp.lat, p, p) == Rational(-3, 2));
  }
  for (const Vec8& v : dp.F.members) {
    const auto p = project_to_sigma(dp.lat, v);
    CHECK(pair(dp.lat, p, p) == Rational(-2));
  }
}

TEST_CASE("search bound 5 is saturated: widening adds no vectors") {
  const auto& dp = fixtures::dp();
  CHECK(enumerate_vectors(dp.lat, 1, -1, 6) == enumerate_vectors(dp.lat, 1, -1, 5));
  CHECK(enumerate_vectors(dp.lat, 2, 0, 6) == enumerate_vectors(dp.lat, 2, 0, 5));
}

TEST_CASE("pairing tables are symmetric and match recomputation") {
  const auto& dp = fixtures::dp();
  for (const auto* set : {&dp.L, &dp.F, &dp.Lbar, &dp.Fbar}) {
    const int n = set->size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(set->pairing_table[i][j] == set->pairing_table[j][i]);
        CHECK(set->pairing_table[i][j] == dp.lat.pair(set->members[i], set->members[j]));
      }
  }
}

TEST_SUITE_END();
