#include <doctest.h>

#include "fixtures.hpp"
#include "quartic/burnside.hpp"
#include "quartic/errors.hpp"

using namespace quartic;
using burnside::Int;

TEST_SUITE_BEGIN("burnside");

TEST_CASE("d_of matches the published sizes") {
  CHECK(burnside::d_of(6, 0) == 376740);
  CHECK(burnside::d_of(0, 4) == 720720);
  CHECK(burnside::d_of(2, 2) == 762048);
  CHECK(burnside::d_of(0, 0) == 1);
  CHECK(burnside::d_of(0, 3) == 43680);
  CHECK_THROWS_AS(burnside::d_of(29, 0), std::invalid_argument);
  CHECK_THROWS_AS(burnside::d_of(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(burnside::d_of(0, -1), std::invalid_argument);
}

TEST_CASE("fixed_configs generating functions") {
  const std::vector<int> idL(28, 1), idF(63, 1);
  CHECK(burnside::fixed_configs(idL, idF, 4, 0) == 20475);

  // A single 28-cycle fixes no 4-subset.
  CHECK(burnside::fixed_configs({28}, idF, 4, 0) == 0);

  // One 2-cycle on the families: fixed 1-multisets are the fixed points.
  std::vector<int> lamF{2};
  lamF.insert(lamF.end(), 61, 1);
  CHECK(burnside::fixed_configs(idL, lamF, 0, 1) == 61);
}

TEST_CASE("count_orbits reproduces the published counts") {
  const auto& census = fixtures::census();
  CHECK(burnside::count_orbits(census, 4, 0).N == 3);
  CHECK(burnside::count_orbits(census, 0, 4).N == 30);
  CHECK(burnside::count_orbits(census, 2, 2).N == 23);
  CHECK(burnside::count_orbits(census, 0, 10).N == 490750);
  CHECK(burnside::count_orbits(census, 14, 0).N == 103);
}

TEST_CASE("published table rows") {
  const auto& census = fixtures::census();
  const long long rowN_m[14] = {1, 1, 2, 3, 5, 10, 16, 23, 37, 54, 70, 90, 101, 103};
  for (int m = 1; m <= 14; ++m) CHECK(burnside::count_orbits(census, m, 0).N == rowN_m[m - 1]);

  const long long rowN_n[10] = {1, 3, 9, 30, 112, 501, 2483, 13791, 81404, 490750};
  for (int n = 1; n <= 10; ++n) CHECK(burnside::count_orbits(census, 0, n).N == rowN_n[n - 1]);

  const struct {
    int m, n;
    long long N;
  } mixed[] = {{1, 1, 2},    {1, 2, 8},    {2, 1, 4},   {1, 3, 33},   {2, 2, 23},
               {3, 1, 9},    {1, 4, 162},  {2, 3, 132}, {3, 2, 66},   {4, 1, 20},
               {1, 5, 901},  {2, 4, 889},  {3, 3, 508}, {4, 2, 190},  {5, 1, 45},
               {1, 6, 5674}, {2, 5, 6503}, {3, 4, 4348}, {4, 3, 1854}, {5, 2, 531},
               {6, 1, 103}};
  for (const auto& e : mixed) CHECK(burnside::count_orbits(census, e.m, e.n).N == e.N);
}

TEST_CASE("count_table: complement symmetry and corner cases") {
  const auto& census = fixtures::census();
  const auto table = burnside::count_table(census, 6, 2);
  CHECK(table.complement_symmetric);
  CHECK(table.N[0][0] == 1);
  CHECK(table.N[4][0] == 3);
  CHECK(table.N[2][2] == 23);
  for (int m = 0; m <= 28; ++m)
    CHECK(burnside::count_orbits(census, m, 0).N == burnside::count_orbits(census, 28 - m, 0).N);
}

TEST_CASE("the Burnside sandwich d/|W| <= N <= d holds") {
  const auto& census = fixtures::census();
  for (int m = 0; m <= 28; m += 4)
    for (long long n = 0; n <= 8; n += 2) {
      const auto r = burnside::count_orbits(census, m, n);
      CHECK(r.N * 1451520 >= r.d);
      CHECK(r.N <= r.d);
    }
}

TEST_CASE("a corrupted census fails the divisibility assertion") {
  auto census = fixtures::census();
  census.entries.front().count += 1;
  CHECK_THROWS_AS(burnside::count_orbits(census, 3, 0), InternalError);
}

TEST_SUITE_END();
