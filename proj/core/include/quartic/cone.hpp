#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "quartic/lattice.hpp"

namespace quartic::cone {

/// k-clique counts of the disjointness graph on the 56 lifts (vertices
/// joined iff the pairing is 0), for k = 0..max_k.  k-cliques with
/// k <= 6 correspond to faces of dimension 8-k; 7-cliques to the rays
/// whose dual graph is 7 A1.
struct CliqueCensus {
  std::array<std::uint64_t, 8> count{};  // count[k], k = 0..7
};

CliqueCensus clique_census(const lattice::DelPezzo& dp, int max_k = 7);

/// For a fiber class v: the 6 pairs {l, l'} of lifts with <l,l'> = 1 and
/// l + l' = v.  The 12 lifts are distinct and lifts from different pairs
/// are orthogonal (the 6 A1-tilde dual graph after the scale-2 change).
struct FiberReducibleMembers {
  lattice::Vec8 fiber;                                       // the class in F
  std::array<std::pair<std::uint16_t, std::uint16_t>, 6> pairs;  // indices into L
};

// One entry per element of F, in F's canonical order; 126 entries.
// Throws InternalError if any fiber class fails the 6-pairs/12-lifts or
// dual-graph shape checks.
std::vector<FiberReducibleMembers> six_a1_tilde_configs(const lattice::DelPezzo& dp);

// True iff the vectors with <v,v> = -1 and 1 <= <v,h> <= 2 are exactly
// L: the degree-1 stratum is all of L and the degree-2 stratum is empty.
bool low_degree_root_check(const lattice::DelPezzo& dp);

}  // namespace quartic::cone
