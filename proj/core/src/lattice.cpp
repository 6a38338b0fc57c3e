#include "quartic/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "quartic/errors.hpp"

namespace quartic::lattice {

Vec8 Lattice::iota(const Vec8& v) const {
  const Coord d = pair(v, h);
  Vec8 out;
  for (int i = 0; i < rank; ++i) out[i] = d * h[i] - v[i];
  return out;
}

Lattice build_lattice() {
  Lattice lat;
  for (auto& row : lat.gram) row.fill(0);
  lat.gram[0][0] = 1;
  for (int i = 1; i < Lattice::rank; ++i) lat.gram[i][i] = -1;
  lat.h = {3, 1, 1, 1, 1, 1, 1, 1};
  if (lat.pair(lat.h, lat.h) != 2) throw InternalError("lattice: <h,h> != 2");
  return lat;
}

namespace {

// Depth-first search over v[1..7] with fixed coordinate sum and sum of
// squares, both derived from the degree/norm constraints.
void search_tail(Coord bound, int idx, Coord sum_left, Coord sq_left, Vec8& v,
                 std::vector<Vec8>& out) {
  const int tail = Lattice::rank - idx;
  if (tail == 0) {
    if (sum_left == 0 && sq_left == 0) out.push_back(v);
    return;
  }
  // Cauchy-Schwarz: the remaining coordinates can realize sum_left only
  // if sum_left^2 <= tail * sq_left.
  if (sum_left * sum_left > static_cast<Coord>(tail) * sq_left) return;
  for (Coord c = -bound; c <= bound; ++c) {
    if (c * c > sq_left) continue;
    v[idx] = c;
    search_tail(bound, idx + 1, sum_left - c, sq_left - c * c, v, out);
  }
  v[idx] = 0;
}

bool is_primitive(const Vec8& v) {
  Coord g = 0;
  for (Coord c : v) g = std::gcd(g, std::abs(c));
  return g == 1;
}

PointSet with_pairing_table(const Lattice& lat, SetKind kind, std::vector<Vec8> members) {
  PointSet ps;
  ps.kind = kind;
  ps.members = std::move(members);
  const int n = ps.size();
  ps.pairing_table.assign(n, std::vector<Coord>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ps.pairing_table[i][j] = lat.pair(ps.members[i], ps.members[j]);
  return ps;
}

}  // namespace

int PointSet::index_of(const Vec8& v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) return -1;
  return static_cast<int>(it - members.begin());
}

std::vector<Vec8> enumerate_vectors(const Lattice& lat, Coord degree, Coord norm,
                                    Coord bound) {
  std::vector<Vec8> out;
  for (Coord v0 = -bound; v0 <= bound; ++v0) {
    // <v,h> = 3 v0 - (v1+...+v7) and <v,v> = v0^2 - (v1^2+...+v7^2).
    const Coord sum_tail = 3 * v0 - degree;
    const Coord sq_tail = v0 * v0 - norm;
    if (sq_tail < 0) continue;
    Vec8 v{};
    v[0] = v0;
    search_tail(bound, 1, sum_tail, sq_tail, v, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet enumerate_L(const Lattice& lat) {
  auto vs = enumerate_vectors(lat, 1, -1);
  if (vs.size() != 56)
    throw InternalError("enumerate_L: found " + std::to_string(vs.size()) +
                        " vectors, expected 56");
  return with_pairing_table(lat, SetKind::L, std::move(vs));
}

PointSet enumerate_F(const Lattice& lat) {
  auto vs = enumerate_vectors(lat, 2, 0);
  std::erase_if(vs, [](const Vec8& v) { return !is_primitive(v); });
  if (vs.size() != 126)
    throw InternalError("enumerate_F: found " + std::to_string(vs.size()) +
                        " vectors, expected 126");
  return with_pairing_table(lat, SetKind::F, std::move(vs));
}

CanonicalClasses canonical_order(const Lattice& lat, std::vector<Vec8> vectors) {
  std::sort(vectors.begin(), vectors.end());
  if (std::adjacent_find(vectors.begin(), vectors.end()) != vectors.end())
    throw std::invalid_argument("canonical_order: duplicate input vector");
  CanonicalClasses cc;
  cc.class_reps.reserve(vectors.size() / 2);
  for (const Vec8& v : vectors) {
    const Vec8 w = lat.iota(v);
    if (!std::binary_search(vectors.begin(), vectors.end(), w))
      throw std::invalid_argument("canonical_order: input not closed under iota");
    if (v == w)
      throw std::invalid_argument("canonical_order: iota-fixed vector has no class pair");
    if (v < w) cc.class_reps.push_back(v);
  }
  // The reps inherit the sort order of the input.
  cc.sorted = std::move(vectors);
  return cc;
}

RationalVec8 project_to_sigma(const Lattice& lat, const Vec8& v) {
  const Coord d = lat.pair(v, lat.h);
  RationalVec8 out;
  for (int i = 0; i < Lattice::rank; ++i)
    out[i] = Rational(v[i]) - Rational(d, 2) * Rational(lat.h[i]);
  return out;
}

Rational pair(const Lattice& lat, const RationalVec8& a, const RationalVec8& b) {
  Rational s(0);
  for (int i = 0; i < Lattice::rank; ++i)
    s += Rational(lat.gram[i][i]) * a[i] * b[i];
  return s;
}

DelPezzo DelPezzo::build() {
  DelPezzo dp;
  dp.lat = build_lattice();
  dp.L = enumerate_L(dp.lat);
  dp.F = enumerate_F(dp.lat);

  auto classes_of = [&](const PointSet& ps, SetKind kind, std::size_t expect) {
    auto cc = canonical_order(dp.lat, ps.members);
    if (cc.class_reps.size() != expect)
      throw InternalError("canonical_order: wrong class count");
    return with_pairing_table(dp.lat, kind, std::move(cc.class_reps));
  };
  dp.Lbar = classes_of(dp.L, SetKind::Lbar, 28);
  dp.Fbar = classes_of(dp.F, SetKind::Fbar, 63);
  return dp;
}

namespace {

int class_index(const Lattice& lat, const PointSet& classes, const Vec8& lift,
                const char* what) {
  const Vec8 w = lat.iota(lift);
  const int idx = classes.index_of(std::min(lift, w));
  if (idx < 0) throw InternalError(std::string(what) + ": lift is not in the expected set");
  return idx;
}

}  // namespace

int DelPezzo::line_class_of(const Vec8& lift) const {
  return class_index(lat, Lbar, lift, "line_class_of");
}

int DelPezzo::family_class_of(const Vec8& lift) const {
  return class_index(lat, Fbar, lift, "family_class_of");
}

std::pair<Vec8, Vec8> DelPezzo::line_lifts(int lbar_index) const {
  const Vec8& v = Lbar.members.at(lbar_index);
  return {v, lat.iota(v)};
}

std::pair<Vec8, Vec8> DelPezzo::family_lifts(int fbar_index) const {
  const Vec8& v = Fbar.members.at(fbar_index);
  return {v, lat.iota(v)};
}

}  // namespace quartic::lattice
