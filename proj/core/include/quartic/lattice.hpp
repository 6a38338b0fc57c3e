#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace quartic::lattice {

using Coord = std::int64_t;
using Vec8 = std::array<Coord, 8>;
using Rational = boost::rational<long long>;
using RationalVec8 = std::array<Rational, 8>;

/// Rank-8 unimodular lattice of signature (1,7) with Gram matrix
/// diag(1,-1,...,-1) in the fixed basis and the distinguished class
/// h = (3,1,1,1,1,1,1,1) of square 2.  h^perp is a root lattice of
/// type E7.  All arithmetic is exact.
struct Lattice {
  static constexpr int rank = 8;

  std::array<std::array<Coord, 8>, 8> gram;
  Vec8 h;

  Coord pair(const Vec8& a, const Vec8& b) const {
    Coord s = a[0] * b[0];
    for (int i = 1; i < rank; ++i) s -= a[i] * b[i];
    return s;
  }
  Coord norm(const Vec8& v) const { return pair(v, v); }

  // Covering involution: <v,h> h - v.  Fixes h, acts as -1 on h^perp.
  Vec8 iota(const Vec8& v) const;
};

Lattice build_lattice();

enum class SetKind { L, F, Lbar, Fbar };

/// An ordered set of lattice vectors with all mutual pairings cached.
/// Members are kept in the canonical (lexicographic) order, so indices
/// are reproducible across runs.
struct PointSet {
  SetKind kind;
  std::vector<Vec8> members;
  std::vector<std::vector<Coord>> pairing_table;

  int size() const { return static_cast<int>(members.size()); }
  // Binary search over the sorted members; -1 if absent.
  int index_of(const Vec8& v) const;
  bool contains(const Vec8& v) const { return index_of(v) >= 0; }
};

// All v with <v,h> = degree and <v,v> = norm, lexicographically sorted.
// Coordinates are searched in [-bound, bound]; bound = 5 is sufficient
// for every set used here (a widening test checks that enlarging the
// range adds no vectors).
std::vector<Vec8> enumerate_vectors(const Lattice& lat, Coord degree, Coord norm,
                                    Coord bound = 5);

// The 56 classes of Y-lifts of bitangents: <v,h> = 1, <v,v> = -1.
PointSet enumerate_L(const Lattice& lat);

// The 126 fiber classes: primitive v with <v,h> = 2, <v,v> = 0.
PointSet enumerate_F(const Lattice& lat);

struct CanonicalClasses {
  std::vector<Vec8> sorted;      // the input vectors in lexicographic order
  std::vector<Vec8> class_reps;  // lex-min of {v, iota v}, one per class, sorted
};

// Deterministic total order plus class representatives mod iota.  The
// input must be duplicate-free and closed under iota.
CanonicalClasses canonical_order(const Lattice& lat, std::vector<Vec8> vectors);

// Orthogonal projection to h^perp: v - (<v,h>/2) h, exact.
RationalVec8 project_to_sigma(const Lattice& lat, const Vec8& v);
Rational pair(const Lattice& lat, const RationalVec8& a, const RationalVec8& b);

/// The lattice together with the lift sets L, F and the class sets
/// Lbar (28 bitangent classes), Fbar (63 conic-family classes), all in
/// canonical order.  Immutable after build(); safe to share across
/// threads.
struct DelPezzo {
  Lattice lat;
  PointSet L;     // 56
  PointSet F;     // 126
  PointSet Lbar;  // 28
  PointSet Fbar;  // 63

  static DelPezzo build();

  // Class index of a lift (either of the two lifts of the class).
  int line_class_of(const Vec8& lift) const;
  int family_class_of(const Vec8& lift) const;

  // The two lifts of a class: (representative, iota(representative)).
  std::pair<Vec8, Vec8> line_lifts(int lbar_index) const;
  std::pair<Vec8, Vec8> family_lifts(int fbar_index) const;
};

}  // namespace quartic::lattice
