#include "quartic/intgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "quartic/errors.hpp"

namespace quartic::intgraph {

using lattice::Coord;
using lattice::DelPezzo;
using lattice::Vec8;

char to_char(CC label) { return label == CC::A ? 'A' : label == CC::B ? 'B' : 'C'; }
char to_char(LC label) { return label == LC::Alpha ? 'a' : 'b'; }

bool EdgeTables::is_triangle(int i, int j, int k) const {
  return cube_[(static_cast<std::size_t>(i) * 28 + j) * 28 + k];
}

std::uint64_t triangles_on_Y_count(const DelPezzo& dp) {
  const auto& p = dp.L.pairing_table;
  const int n = dp.L.size();
  std::uint64_t count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (p[i][j] != 1) continue;
      for (int k = j + 1; k < n; ++k)
        if (p[j][k] == 1 && p[k][i] == 1) ++count;
    }
  return count;
}

namespace {

// Multiset {<a_lift, b_lift>, <a_lift, iota b_lift>} as an ordered pair.
std::pair<Coord, Coord> lift_pairings(const DelPezzo& dp, const Vec8& a, const Vec8& b) {
  const Coord x = dp.lat.pair(a, b);
  const Coord y = dp.lat.pair(a, dp.lat.iota(b));
  return {std::min(x, y), std::max(x, y)};
}

}  // namespace

CC cc_label(const DelPezzo& dp, int fbar1, int fbar2) {
  const auto [lo, hi] =
      lift_pairings(dp, dp.Fbar.members.at(fbar1), dp.Fbar.members.at(fbar2));
  if (lo == 0 && hi == 4) return CC::A;
  if (lo == 2 && hi == 2) return CC::B;
  if (lo == 1 && hi == 3) return CC::C;
  throw InternalError("cc_label: unexpected pairing multiset {" + std::to_string(lo) + "," +
                      std::to_string(hi) + "}");
}

LC lc_label(const DelPezzo& dp, int lbar, int fbar) {
  const auto [lo, hi] =
      lift_pairings(dp, dp.Lbar.members.at(lbar), dp.Fbar.members.at(fbar));
  if (lo == 0 && hi == 2) return LC::Alpha;
  if (lo == 1 && hi == 1) return LC::Beta;
  throw InternalError("lc_label: unexpected pairing multiset {" + std::to_string(lo) + "," +
                      std::to_string(hi) + "}");
}

bool has_reducible_member_through(const DelPezzo& dp, int lbar, int fbar) {
  const auto [l, lp] = dp.line_lifts(lbar);
  const auto [v, vp] = dp.family_lifts(fbar);
  for (const Vec8& lift : {l, lp}) {
    for (const Vec8& target : {v, vp}) {
      Vec8 other;
      for (int i = 0; i < 8; ++i) other[i] = target[i] - lift[i];
      if (dp.L.contains(other) && dp.lat.pair(lift, other) == 1) return true;
    }
  }
  return false;
}

EdgeTables EdgeTables::build(const DelPezzo& dp) {
  EdgeTables t;
  t.cube_.assign(28 * 28 * 28, false);

  // Liftability of a class triple: fix lifts with <l1,l2> = 1 and
  // <l2,l3> = 1; the triple lifts iff <l3,l1> = 1.
  auto lift_meeting = [&](const Vec8& a, int lbar) {
    const auto [b, bp] = dp.line_lifts(lbar);
    if (dp.lat.pair(a, b) == 1) return b;
    if (dp.lat.pair(a, bp) == 1) return bp;
    throw InternalError("EdgeTables: no lift with pairing 1 for a distinct class pair");
  };
  for (int i = 0; i < 28; ++i) {
    const Vec8 l1 = dp.Lbar.members[i];
    for (int j = i + 1; j < 28; ++j) {
      const Vec8 l2 = lift_meeting(l1, j);
      for (int k = j + 1; k < 28; ++k) {
        const Vec8 l3 = lift_meeting(l2, k);
        if (dp.lat.pair(l3, l1) == 1) {
          t.triangles.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                                 static_cast<std::uint8_t>(k)});
          for (int a : {i, j, k})
            for (int b : {i, j, k})
              for (int c : {i, j, k})
                if (a != b && b != c && a != c)
                  t.cube_[(static_cast<std::size_t>(a) * 28 + b) * 28 + c] = true;
        }
      }
    }
  }
  if (t.triangles.size() != 1260)
    throw InternalError("EdgeTables: " + std::to_string(t.triangles.size()) +
                        " liftable triangles, expected 1260");
  if (triangles_on_Y_count(dp) != 2520)
    throw InternalError("EdgeTables: triangle count on Y is not 2520");

  // Quadruples: 4-subsets all four of whose triples are liftable; they
  // must partition the triangles 4-at-a-time.
  std::map<std::array<std::uint8_t, 3>, int> triangle_cover;
  for (int a = 0; a < 28; ++a)
    for (int b = a + 1; b < 28; ++b)
      for (int c = b + 1; c < 28; ++c) {
        if (!t.is_triangle(a, b, c)) continue;
        for (int d = c + 1; d < 28; ++d) {
          if (t.is_triangle(a, b, d) && t.is_triangle(a, c, d) && t.is_triangle(b, c, d)) {
            t.quadruples.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                    static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)});
            const std::array<std::uint8_t, 4>& q = t.quadruples.back();
            for (int drop = 0; drop < 4; ++drop) {
              std::array<std::uint8_t, 3> tri;
              for (int s = 0, w = 0; s < 4; ++s)
                if (s != drop) tri[w++] = q[s];
              ++triangle_cover[tri];
            }
          }
        }
      }
  if (t.quadruples.size() != 315)
    throw InternalError("EdgeTables: " + std::to_string(t.quadruples.size()) +
                        " quadruples, expected 315");
  if (triangle_cover.size() != t.triangles.size() ||
      !std::all_of(triangle_cover.begin(), triangle_cover.end(),
                   [](const auto& kv) { return kv.second == 1; }))
    throw InternalError("EdgeTables: quadruples do not partition the triangles");

  for (int i = 0; i < 63; ++i)
    for (int j = 0; j < 63; ++j) t.cc[i][j] = cc_label(dp, i, j);
  for (int i = 0; i < 28; ++i)
    for (int j = 0; j < 63; ++j) t.lc[i][j] = lc_label(dp, i, j);
  return t;
}

IntersectionGraph graph_of(const EdgeTables& tables, const orbits::Configuration& x) {
  IntersectionGraph g;
  g.m = x.m();
  g.n = x.n();
  for (int a = 0; a < g.m; ++a)
    for (int b = a + 1; b < g.m; ++b)
      for (int c = b + 1; c < g.m; ++c)
        if (tables.is_triangle(x.lines[a], x.lines[b], x.lines[c]))
          g.T.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                         static_cast<std::uint8_t>(c)});

  std::map<std::uint8_t, std::uint8_t> renumber;
  for (std::uint8_t cls : x.conics) {
    if (!renumber.count(cls))
      renumber[cls] = static_cast<std::uint8_t>(renumber.size());
  }
  g.family.reserve(g.n);
  for (std::uint8_t cls : x.conics) g.family.push_back(renumber[cls]);

  g.ecc.assign(g.n, std::vector<std::uint8_t>(g.n, static_cast<std::uint8_t>(CC::A)));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      g.ecc[i][j] = static_cast<std::uint8_t>(tables.cc[x.conics[i]][x.conics[j]]);
  g.elc.assign(g.m, std::vector<std::uint8_t>(g.n));
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.n; ++j)
      g.elc[i][j] = static_cast<std::uint8_t>(tables.lc[x.lines[i]][x.conics[j]]);
  return g;
}

std::uint64_t count_graphs(const EdgeTables& tables, const orbits::OrbitDecomposition& dec,
                           int max_vertices) {
  std::set<std::vector<std::uint8_t>> forms;
  for (const auto& rep : dec.representatives)
    forms.insert(canonical_form(graph_of(tables, rep), max_vertices));
  return forms.size();
}

namespace {

std::vector<std::array<std::uint8_t, 3>> restricted_triangles(const EdgeTables& tables,
                                                              const orbits::Configuration& x) {
  if (x.n() != 0) throw std::invalid_argument("two-graph statistics require n = 0");
  return graph_of(tables, x).T;
}

int overlap(const std::array<std::uint8_t, 3>& a, const std::array<std::uint8_t, 3>& b) {
  int c = 0;
  for (std::uint8_t u : a)
    for (std::uint8_t v : b)
      if (u == v) ++c;
  return c;
}

}  // namespace

TwoGraphStats two_graph_stats(const EdgeTables& tables, const orbits::Configuration& x) {
  const auto tri = restricted_triangles(tables, x);
  TwoGraphStats s;
  s.triangle_count = tri.size();
  for (std::size_t i = 0; i < tri.size(); ++i)
    for (std::size_t j = i + 1; j < tri.size(); ++j) {
      switch (overlap(tri[i], tri[j])) {
        case 0: ++s.a0; break;
        case 1: ++s.a1; break;
        case 2: ++s.a2; break;
        default: throw InternalError("two_graph_stats: distinct triangles sharing 3 vertices");
      }
    }
  return s;
}

std::uint64_t disjoint_triangle_triples(const EdgeTables& tables,
                                        const orbits::Configuration& x) {
  const auto tri = restricted_triangles(tables, x);
  const std::size_t t = tri.size();
  if (t < 3) return 0;
  const std::size_t words = (t + 63) / 64;
  // disj[i] has bit j set iff j > i and tri[i], tri[j] are disjoint.
  std::vector<std::uint64_t> disj(t * words, 0);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      if (overlap(tri[i], tri[j]) == 0) disj[i * words + j / 64] |= std::uint64_t{1} << (j % 64);

  std::uint64_t count = 0;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      if (!(disj[i * words + j / 64] >> (j % 64) & 1)) continue;
      for (std::size_t w = 0; w < words; ++w)
        count += std::popcount(disj[i * words + w] & disj[j * words + w]);
    }
  return count;
}

std::string graph_json_string(const IntersectionGraph& g,
                              const std::vector<std::uint8_t>& canonical) {
  nlohmann::json T = nlohmann::json::array();
  for (const auto& t : g.T) T.push_back({t[0], t[1], t[2]});
  nlohmann::json ecc = nlohmann::json::array();
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      ecc.push_back({i, j, std::string(1, to_char(static_cast<CC>(g.ecc[i][j])))});
  nlohmann::json elc = nlohmann::json::array();
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.n; ++j)
      elc.push_back(
          {i, j, static_cast<LC>(g.elc[i][j]) == LC::Alpha ? "α" : "β"});
  std::ostringstream hex;
  for (std::uint8_t b : canonical) {
    static const char* digits = "0123456789abcdef";
    hex << digits[b >> 4] << digits[b & 15];
  }
  nlohmann::json j{{"m", g.m},
                   {"n", g.n},
                   {"families", g.family},
                   {"T", T},
                   {"Ecc", ecc},
                   {"Elc", elc},
                   {"canonical", hex.str()}};
  return j.dump();
}

}  // namespace quartic::intgraph
