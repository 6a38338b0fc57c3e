#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quartic/weyl.hpp"

namespace quartic::orbits {

/// A point of P^(m,n): an m-subset of the 28 line classes and an
/// n-multiset of the 63 family classes.  lines strictly increasing,
/// conics weakly increasing; the total order is lexicographic.
struct Configuration {
  std::vector<std::uint8_t> lines;
  std::vector<std::uint8_t> conics;

  int m() const { return static_cast<int>(lines.size()); }
  int n() const { return static_cast<int>(conics.size()); }

  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;
};

// Lexicographic ranking: rank = subset_rank * C(n+62,62) + multiset_rank.
// Inverse of unrank.  Throws std::invalid_argument on invalid input, on
// out-of-range rank, and when the rank space exceeds 64 bits.
std::uint64_t rank(const Configuration& x);
Configuration unrank(std::uint64_t r, int m, int n);

// Maps each index through the corresponding permutation and re-sorts.
Configuration apply(const weyl::GroupElement& g, const Configuration& x);

// Complementary line subset; requires n = 0.
Configuration complement(const Configuration& x);

struct DecomposeOptions {
  std::uint64_t limit = 50'000'000;  // refuse larger P^(m,n)
  int threads = 1;
};

struct OrbitDecomposition {
  int m = 0;
  int n = 0;
  std::uint64_t total = 0;
  // Ascending orbit sizes, ties broken by representative; representatives
  // are the lexicographically minimal configurations of their orbits.
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<Configuration> representatives;
};

// Union-find over all of P^(m,n) under the generator actions.  Output is
// deterministic, independent of thread count and scheduling.  Throws
// ResourceLimitError if d^(m,n) exceeds opts.limit.
OrbitDecomposition decompose(const std::vector<weyl::GroupElement>& generators, int m,
                             int n, const DecomposeOptions& opts = {});

// Breadth-first closure of {x} under the generators.  Sorted.  Throws
// ResourceLimitError above the budget.
std::vector<Configuration> orbit_of(const std::vector<weyl::GroupElement>& generators,
                                    const Configuration& x,
                                    std::uint64_t budget = 1'451'520);

std::string to_json_string(const OrbitDecomposition& dec);

}  // namespace quartic::orbits
