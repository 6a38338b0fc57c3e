#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quartic/lattice.hpp"
#include "quartic/orbits.hpp"

namespace quartic::intgraph {

// Conic-pair labels, by the lift-pairing multiset {<c1,c2>, <c1,iota c2>}:
// {0,4} -> A (same family), {2,2} -> B, {1,3} -> C.
enum class CC : std::uint8_t { A = 0, B = 1, C = 2 };

// Line-conic labels, by {<l,c>, <l,iota c>}: {0,2} -> alpha, {1,1} -> beta.
enum class LC : std::uint8_t { Alpha = 0, Beta = 1 };

char to_char(CC label);   // 'A', 'B', 'C'
char to_char(LC label);   // 'a' for alpha, 'b' for beta

/// Global label tables over the 28 line classes and 63 family classes:
/// the 1260 liftable triangles, the 315 quadruples partitioning them,
/// and the full CC / LC label matrices.
struct EdgeTables {
  std::vector<std::array<std::uint8_t, 3>> triangles;   // sorted triples, 1260
  std::vector<std::array<std::uint8_t, 4>> quadruples;  // sorted 4-sets, 315
  std::array<std::array<CC, 63>, 63> cc;                // diagonal forced to A
  std::array<std::array<LC, 63>, 28> lc;

  bool is_triangle(int i, int j, int k) const;

  static EdgeTables build(const lattice::DelPezzo& dp);

 private:
  std::vector<bool> cube_;  // 28^3 membership bits
};

// Number of triples in L with all pairwise pairings 1 (expected 2520).
std::uint64_t triangles_on_Y_count(const lattice::DelPezzo& dp);

// The label is determined by the lift-pairing multiset of the class pair.
CC cc_label(const lattice::DelPezzo& dp, int fbar1, int fbar2);
LC lc_label(const lattice::DelPezzo& dp, int lbar, int fbar);

// The combinatorial form of the singular-member criterion: some lift l
// of the line class and some l' in L satisfy <l,l'> = 1 with [l]+[l'] a
// lift of the family class.  Agrees with lc_label == Alpha.
bool has_reducible_member_through(const lattice::DelPezzo& dp, int lbar, int fbar);

/// The pentad invariant of a configuration: line vertices, conic
/// vertices with abstract family ids, liftable triangles, and the label
/// restrictions.  Conic vertices are compared only through the family
/// partition and the labels, never through raw class indices.
struct IntersectionGraph {
  int m = 0;
  int n = 0;
  std::vector<std::array<std::uint8_t, 3>> T;      // local line indices
  std::vector<std::uint8_t> family;                // local ids, first-occurrence order
  std::vector<std::vector<std::uint8_t>> ecc;      // n x n of CC
  std::vector<std::vector<std::uint8_t>> elc;      // m x n of LC
};

IntersectionGraph graph_of(const EdgeTables& tables, const orbits::Configuration& x);

// Canonical byte encoding: equal iff the graphs are isomorphic as
// pentads.  Partition backtracking with color refinement; throws
// ResourceLimitError when m + n exceeds max_vertices.
std::vector<std::uint8_t> canonical_form(const IntersectionGraph& g, int max_vertices = 24);

// Minimum encoding over all m! * n! vertex bijections; the testing
// oracle for the refined version.  Requires m + n <= 8.
std::vector<std::uint8_t> canonical_form_bruteforce(const IntersectionGraph& g);

// Number of pairwise non-isomorphic graphs over the orbit representatives.
std::uint64_t count_graphs(const EdgeTables& tables, const orbits::OrbitDecomposition& dec,
                           int max_vertices = 24);

struct TwoGraphStats {
  std::uint64_t triangle_count = 0;
  std::uint64_t a0 = 0, a1 = 0, a2 = 0;  // pairs {t_i,t_j} with |t_i ^ t_j| = 0,1,2
};

// Requires n = 0.
TwoGraphStats two_graph_stats(const EdgeTables& tables, const orbits::Configuration& x);

// 3-subsets of the configuration's liftable triangles that are pairwise
// disjoint.  Requires n = 0.
std::uint64_t disjoint_triangle_triples(const EdgeTables& tables,
                                        const orbits::Configuration& x);

std::string graph_json_string(const IntersectionGraph& g,
                              const std::vector<std::uint8_t>& canonical);

}  // namespace quartic::intgraph
