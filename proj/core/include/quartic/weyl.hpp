#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "quartic/lattice.hpp"

namespace quartic::weyl {

/// A reflection in a root r with <r,r> = -2, <r,h> = 0:
/// x -> x + <x,r> r.  An integral isometry of order 2 fixing h.
struct Reflection {
  lattice::Vec8 root;

  lattice::Vec8 apply(const lattice::Lattice& lat, const lattice::Vec8& x) const;
};

// Seven roots spanning h^perp whose reflections generate the full
// isometry group of h^perp.  Verified downstream by the group order.
std::vector<Reflection> simple_reflections(const lattice::Lattice& lat);

/// An element of the faithful quotient of the isometry group acting on
/// the 91 points Lbar (28) and Fbar (63), stored as index permutations.
struct GroupElement {
  std::array<std::uint8_t, 28> line_perm;
  std::array<std::uint8_t, 63> family_perm;

  static GroupElement identity();
  bool is_identity() const;
  // Composition: (a.after(b))(x) = a(b(x)).
  GroupElement after(const GroupElement& b) const;
  GroupElement inverse() const;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

// The permutation induced on Lbar and Fbar by a reflection.  Throws
// InternalError if the image of a representative leaves its set.
GroupElement to_group_element(const Reflection& r, const lattice::DelPezzo& dp);

std::vector<GroupElement> standard_generators(const lattice::DelPezzo& dp);

struct EnumerationOptions {
  std::size_t memory_budget_bytes = std::size_t{2} << 30;  // 2 GiB
  // Invoked with the running element count every ~128k elements.
  std::function<void(std::uint64_t)> progress;
};

// Breadth-first closure of the generators under right multiplication,
// deduplicated by the full 91-point permutation.  visit() is called
// exactly once per element, identity first, in a deterministic order.
// Returns the group order (1451520 for the standard generators).
std::uint64_t enumerate_group(const std::vector<GroupElement>& generators,
                              const EnumerationOptions& opts,
                              const std::function<void(const GroupElement&)>& visit);

std::uint64_t group_order(const std::vector<GroupElement>& generators,
                          const EnumerationOptions& opts = {});

/// The multiset of (cycle type on Lbar, cycle type on Fbar) pairs over
/// the whole group; everything Burnside counting needs to know.
struct CycleCensus {
  struct Entry {
    std::vector<int> lam_L;  // partition of 28, descending
    std::vector<int> lam_F;  // partition of 63, descending
    std::uint64_t count;

    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;  // lexicographic in (lam_L, lam_F)
  std::uint64_t group_order = 0;

  bool operator==(const CycleCensus&) const = default;
};

CycleCensus cycle_census(const std::vector<GroupElement>& generators,
                         const EnumerationOptions& opts = {});

// Descending cycle type of a permutation.
template <std::size_t N>
std::vector<int> cycle_type(const std::array<std::uint8_t, N>& perm);

// Number of 7-subsets of L with pairwise pairing 0 (expected 576).
std::uint64_t count_disjoint_seven_tuples(const lattice::DelPezzo& dp);

// True iff |L^{7}| * 7! equals 2903040, twice the faithful quotient's order.
bool order_consistency_check(const lattice::DelPezzo& dp);

}  // namespace quartic::weyl
