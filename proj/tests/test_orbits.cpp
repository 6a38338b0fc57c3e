#include <algorithm>
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "quartic/burnside.hpp"
#include "quartic/errors.hpp"
#include "quartic/orbits.hpp"

using namespace quartic;
using orbits::Configuration;

namespace {

Configuration random_config(std::mt19937_64& rng, int m, int n) {
  Configuration x;
  std::vector<std::uint8_t> deck(28);
  std::iota(deck.begin(), deck.end(), 0);
  std::shuffle(deck.begin(), deck.end(), rng);
  x.lines.assign(deck.begin(), deck.begin() + m);
  std::sort(x.lines.begin(), x.lines.end());
  for (int i = 0; i < n; ++i) x.conics.push_back(static_cast<std::uint8_t>(rng() % 63));
  std::sort(x.conics.begin(), x.conics.end());
  return x;
}

const Configuration& rep_of_size(const orbits::OrbitDecomposition& dec, std::uint64_t size) {
  const auto matches = std::count(dec.orbit_sizes.begin(), dec.orbit_sizes.end(), size);
  REQUIRE(matches == 1);
  const auto it = std::find(dec.orbit_sizes.begin(), dec.orbit_sizes.end(), size);
  return dec.representatives[it - dec.orbit_sizes.begin()];
}

}  // namespace

TEST_SUITE_BEGIN("orbits");

TEST_CASE("rank/unrank round-trips on random configurations") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const int m = static_cast<int>(rng() % 29);
    const int n = static_cast<int>(rng() % 4);
    const Configuration x = random_config(rng, m, n);
    CHECK(orbits::unrank(orbits::rank(x), m, n) == x);
  }
}

TEST_CASE("rank anchors and range errors") {
  CHECK(orbits::rank(Configuration{{0}, {}}) == 0);
  // All 2-multisets over 63 values: C(64,2) ranks, densely filled.
  CHECK(orbits::rank(Configuration{{}, {62, 62}}) == 2015);
  CHECK(orbits::unrank(2015, 0, 2) == Configuration{{}, {62, 62}});
  CHECK_THROWS_AS(orbits::unrank(2016, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(orbits::rank(Configuration{{3, 3}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(orbits::rank(Configuration{{}, {5, 4}}), std::invalid_argument);
}

TEST_CASE("apply: identity, inverses, transitivity on single points") {
  std::mt19937_64 rng(13);
  const auto id = weyl::GroupElement::identity();
  for (int i = 0; i < 200; ++i) {
    const Configuration x = random_config(rng, static_cast<int>(rng() % 7), 2);
    CHECK(orbits::apply(id, x) == x);
    const auto g = fixtures::random_element(rng);
    CHECK(orbits::apply(g, orbits::apply(g.inverse(), x)) == x);
  }
  CHECK(orbits::orbit_of(fixtures::gens(), Configuration{{5}, {}}).size() == 28);
  CHECK(orbits::orbit_of(fixtures::gens(), Configuration{{}, {17}}).size() == 63);
  CHECK(orbits::orbit_of(fixtures::gens(), Configuration{}).size() == 1);
}

TEST_CASE("decompose (4,0): the three published orbits") {
  const auto dec = orbits::decompose(fixtures::gens(), 4, 0);
  CHECK(dec.orbit_sizes == std::vector<std::uint64_t>{315, 5040, 15120});
  CHECK(dec.total == 20475);
}

TEST_CASE("decompose (0,4): the 30 published orbit sizes") {
  const auto dec = orbits::decompose(fixtures::gens(), 0, 4);
  std::vector<std::uint64_t> want = {63,    945,   945,   945,   1008,  1008,  1890,  2016,
                                     3780,  3780,  5040,  5040,  10080, 11340, 15120, 15120,
                                     15120, 15120, 15120, 22680, 30240, 30240, 30240, 30240,
                                     30240, 45360, 45360, 90720, 120960, 120960};
  CHECK(dec.orbit_sizes == want);
  for (std::uint64_t s : dec.orbit_sizes) CHECK(1451520 % s == 0);
}

TEST_CASE("decompose (2,2): the 23 published orbit sizes") {
  const auto dec = orbits::decompose(fixtures::gens(), 2, 2);
  std::vector<std::uint64_t> want = {378,   1890,  3780,  3780,  3780,  6048,  7560,  7560,
                                     12096, 12096, 15120, 22680, 30240, 30240, 30240, 45360,
                                     45360, 60480, 60480, 60480, 60480, 120960, 120960};
  CHECK(dec.orbit_sizes == want);
}

TEST_CASE("decompose (0,3): nine orbits totalling 43680") {
  const auto dec = orbits::decompose(fixtures::gens(), 0, 3);
  std::vector<std::uint64_t> want = {63, 315, 336, 1890, 2016, 3780, 5040, 15120, 15120};
  CHECK(dec.orbit_sizes == want);
  CHECK(dec.total == 43680);
}

TEST_CASE("orbit counts agree with Burnside counting") {
  for (auto [m, n] : {std::pair{4, 0}, {0, 3}, {0, 4}, {2, 2}, {6, 0}, {3, 1}}) {
    const auto dec = orbits::decompose(fixtures::gens(), m, n);
    CHECK(burnside::count_orbits(fixtures::census(), m, n).N == dec.orbit_sizes.size());
  }
}

TEST_CASE("decompose output is independent of the thread count") {
  orbits::DecomposeOptions one, four;
  one.threads = 1;
  four.threads = 4;
  for (auto [m, n] : {std::pair{4, 0}, {0, 3}, {2, 1}}) {
    const auto a = orbits::decompose(fixtures::gens(), m, n, one);
    const auto b = orbits::decompose(fixtures::gens(), m, n, four);
    CHECK(orbits::to_json_string(a) == orbits::to_json_string(b));
  }
}

TEST_CASE("decompose refuses oversized spaces with an actionable message") {
  orbits::DecomposeOptions opts;
  opts.limit = 1000;
  try {
    orbits::decompose(fixtures::gens(), 4, 0, opts);
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("20475") != std::string::npos);
    CHECK(msg.find("1000") != std::string::npos);
  }
}

TEST_CASE("complement is an equivariant involution on line configurations") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Configuration x = random_config(rng, static_cast<int>(rng() % 29), 0);
    CHECK(orbits::complement(orbits::complement(x)) == x);
    const auto g = fixtures::random_element(rng);
    CHECK(orbits::apply(g, orbits::complement(x)) == orbits::complement(orbits::apply(g, x)));
  }
  Configuration all;
  for (int i = 0; i < 28; ++i) all.lines.push_back(static_cast<std::uint8_t>(i));
  CHECK(orbits::complement(all) == Configuration{});
  CHECK_THROWS_AS(orbits::complement(Configuration{{}, {1}}), std::invalid_argument);
}

TEST_CASE("complements of the two triangle-free (6,0) orbits keep their sizes") {
  const auto dec = orbits::decompose(fixtures::gens(), 6, 0);
  const auto comp_orbit = [&](std::uint64_t size) {
    return orbits::orbit_of(fixtures::gens(), orbits::complement(rep_of_size(dec, size))).size();
  };
  CHECK(comp_orbit(2016) == 2016);
  CHECK(comp_orbit(1008) == 1008);
}

TEST_CASE("orbit_of enforces its budget") {
  CHECK_THROWS_AS(orbits::orbit_of(fixtures::gens(), Configuration{{0, 1, 2}, {}}, 10),
                  ResourceLimitError);
}

TEST_SUITE_END();
