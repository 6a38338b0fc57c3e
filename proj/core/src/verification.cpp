#include "quartic/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "quartic/burnside.hpp"
#include "quartic/cone.hpp"
#include "quartic/errors.hpp"
#include "quartic/intgraph.hpp"
#include "quartic/orbits.hpp"

namespace quartic::verification {

namespace {

using burnside::Int;
using lattice::DelPezzo;
using orbits::Configuration;

// Published values reproduced by the suite.
constexpr std::array<long long, 14> kTable1N = {1, 1, 2, 3, 5, 10, 16,
                                                23, 37, 54, 70, 90, 101, 103};
constexpr std::array<long long, 14> kTable1G = {1, 1, 2, 3, 5, 9, 16,
                                                23, 37, 54, 70, 90, 101, 103};
constexpr std::array<long long, 10> kTable2N = {1,    3,     9,     30,    112,
                                                501,  2483,  13791, 81404, 490750};
constexpr std::array<long long, 5> kTable2G = {1, 3, 7, 22, 71};

struct MixedEntry {
  int m, n;
  long long N;
  long long G;  // -1: out of required scope (d^(m,n) > 5*10^7)
};
constexpr std::array<MixedEntry, 21> kTable3 = {{{1, 1, 2, 2},
                                                 {1, 2, 8, 8},
                                                 {2, 1, 4, 3},
                                                 {1, 3, 33, 30},
                                                 {2, 2, 23, 17},
                                                 {3, 1, 9, 8},
                                                 {1, 4, 162, 140},
                                                 {2, 3, 132, 95},
                                                 {3, 2, 66, 57},
                                                 {4, 1, 20, 17},
                                                 {1, 5, 901, -1},
                                                 {2, 4, 889, -1},
                                                 {3, 3, 508, -1},
                                                 {4, 2, 190, 164},
                                                 {5, 1, 45, 42},
                                                 {1, 6, 5674, -1},
                                                 {2, 5, 6503, -1},
                                                 {3, 4, 4348, -1},
                                                 {4, 3, 1854, -1},
                                                 {5, 2, 531, -1},
                                                 {6, 1, 103, 96}}};

const std::vector<std::uint64_t> kSizes40 = {315, 5040, 15120};
const std::vector<std::uint64_t> kSizes04 = {
    63,    945,   945,   945,   1008,  1008,  1890,  2016,  3780,  3780,
    5040,  5040,  10080, 11340, 15120, 15120, 15120, 15120, 15120, 22680,
    30240, 30240, 30240, 30240, 30240, 45360, 45360, 90720, 120960, 120960};
const std::vector<std::uint64_t> kSizes22 = {
    378,   1890,  3780,  3780,  3780,  6048,  7560,  7560,
    12096, 12096, 15120, 22680, 30240, 30240, 30240, 45360,
    45360, 60480, 60480, 60480, 60480, 120960, 120960};
const std::vector<std::uint64_t> kSizes60 = {1008,  1260,  2016,  5040,  12096,
                                             22680, 30240, 60480, 60480, 181440};
const std::vector<std::uint64_t> kSizes03 = {63,   315,  336,   1890, 2016,
                                             3780, 5040, 15120, 15120};

struct Table5Row {
  std::uint64_t size, t, a0, a1, a2;
  auto operator<=>(const Table5Row&) const = default;
};
const std::vector<Table5Row> kTable5 = {
    {2016, 0, 0, 0, 0},   {1008, 0, 0, 0, 0},    {30240, 4, 0, 0, 6},
    {60480, 6, 0, 6, 9},  {22680, 8, 2, 10, 16}, {181440, 8, 2, 14, 12},
    {5040, 8, 4, 12, 12}, {12096, 10, 0, 30, 15}, {60480, 10, 2, 24, 19},
    {1260, 12, 6, 30, 30}};

constexpr std::uint64_t kGroupOrder = 1451520;
constexpr std::uint64_t kExplicitLimit = 50'000'000;

class Checker {
 public:
  explicit Checker(std::string name) : result_{std::move(name), true, ""} {}

  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == static_cast<A>(want))) fail(what + ": got " + str(got) + ", want " + str(want));
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    result_.passed = false;
    if (!result_.detail.empty()) result_.detail += "; ";
    result_.detail += what;
  }
  CheckResult take() { return std::move(result_); }

 private:
  template <class T>
  static std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
  CheckResult result_;
};

struct Summary {
  std::vector<std::uint64_t> sizes;
  std::vector<Configuration> reps;
};

std::string key(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

}  // namespace

std::vector<CheckResult> lattice_verify(const DelPezzo& dp) {
  std::vector<CheckResult> out;
  auto check = [&out](const std::string& name, auto&& body) {
    Checker c(name);
    try {
      body(c);
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
    out.push_back(c.take());
  };

  check("L: 56", [&](Checker& c) {
    c.equal(lattice::enumerate_vectors(dp.lat, 1, -1).size(), std::size_t{56}, "|L|");
    c.equal(dp.L.size(), 56, "|dp.L|");
  });
  check("F: 126", [&](Checker& c) {
    c.equal(lattice::enumerate_F(dp.lat).members.size(), std::size_t{126}, "|F|");
    c.equal(dp.F.size(), 126, "|dp.F|");
  });
  check("classes: 28 + 63", [&](Checker& c) {
    c.equal(dp.Lbar.size(), 28, "|Lbar|");
    c.equal(dp.Fbar.size(), 63, "|Fbar|");
  });
  check("triangles: 2520", [&](Checker& c) {
    c.equal(intgraph::triangles_on_Y_count(dp), std::uint64_t{2520}, "triangles on Y");
  });

  try {
    const auto tables = intgraph::EdgeTables::build(dp);
    check("liftable triangles: 1260", [&](Checker& c) {
      c.equal(tables.triangles.size(), std::size_t{1260}, "|Tbar|");
    });
    check("quadruples: 315", [&](Checker& c) {
      c.equal(tables.quadruples.size(), std::size_t{315}, "|Rbar|");
    });
    check("pair split: 945 B / 1008 C", [&](Checker& c) {
      int nb = 0, nc = 0;
      for (int i = 0; i < 63; ++i)
        for (int j = i + 1; j < 63; ++j) {
          if (tables.cc[i][j] == intgraph::CC::B) ++nb;
          if (tables.cc[i][j] == intgraph::CC::C) ++nc;
        }
      c.equal(nb, 945, "B pairs");
      c.equal(nc, 1008, "C pairs");
    });
  } catch (const std::exception& e) {
    out.push_back({"edge tables", false, e.what()});
  }

  check("faces: 56 756 4032 10080 12096 6048 576", [&](Checker& c) {
    const auto census = cone::clique_census(dp);
    const std::array<std::uint64_t, 7> want{56, 756, 4032, 10080, 12096, 6048, 576};
    for (int k = 1; k <= 7; ++k)
      c.equal(census.count[k], want[k - 1], "k = " + std::to_string(k));
  });
  check("7A1 rays: 576", [&](Checker& c) {
    c.equal(weyl::count_disjoint_seven_tuples(dp), std::uint64_t{576}, "|L^{7}|");
  });
  check("6A1~ configs: 126 with 6 pairs / 12 lifts", [&](Checker& c) {
    c.equal(cone::six_a1_tilde_configs(dp).size(), std::size_t{126}, "configurations");
  });
  check("low-degree roots exhausted by L", [&](Checker& c) {
    c.require(cone::low_degree_root_check(dp), "a (-1)-vector of degree 2 exists");
  });
  return out;
}

std::vector<CheckResult> acceptance_suite(const Options& opts,
                                          const weyl::CycleCensus* census_in) {
  using Clock = std::chrono::steady_clock;
  std::vector<CheckResult> results;
  auto log = [&opts](const std::string& s) {
    if (opts.progress) *opts.progress << s << std::endl;
  };

  const DelPezzo dp = DelPezzo::build();
  const auto tables = intgraph::EdgeTables::build(dp);
  const auto gens = weyl::standard_generators(dp);

  log("building cycle census (one-time BFS over the group)...");
  const weyl::CycleCensus census =
      census_in ? *census_in : weyl::cycle_census(gens, {opts.memory_budget_bytes});

  // ---- 1. cardinalities --------------------------------------------------
  {
    Checker c("1. cardinalities: 56/126/28/63, |W|, 576 * 7!");
    c.equal(dp.L.size(), 56, "|L|");
    c.equal(dp.F.size(), 126, "|F|");
    c.equal(dp.Lbar.size(), 28, "|Lbar|");
    c.equal(dp.Fbar.size(), 63, "|Fbar|");
    c.equal(census.group_order, kGroupOrder, "group order");
    const std::uint64_t seven = weyl::count_disjoint_seven_tuples(dp);
    c.equal(seven, std::uint64_t{576}, "|L^{7}|");
    c.equal(seven * 5040, std::uint64_t{2903040}, "|L^{7}| * 7!");
    c.require(weyl::order_consistency_check(dp), "order consistency");
    results.push_back(c.take());
  }

  // ---- 2. Burnside tables ------------------------------------------------
  {
    Checker c("2. Burnside counts match the published tables");
    const auto t0 = Clock::now();
    for (int m = 1; m <= 14; ++m)
      c.equal(burnside::count_orbits(census, m, 0).N, Int(kTable1N[m - 1]),
              "N" + key(m, 0));
    for (int m = 0; m <= 28; ++m)
      c.require(burnside::count_orbits(census, m, 0).N ==
                    burnside::count_orbits(census, 28 - m, 0).N,
                "N" + key(m, 0) + " == N" + key(28 - m, 0));
    for (int n = 1; n <= 10; ++n)
      c.equal(burnside::count_orbits(census, 0, n).N, Int(kTable2N[n - 1]),
              "N" + key(0, n));
    for (const auto& e : kTable3)
      c.equal(burnside::count_orbits(census, e.m, e.n).N, Int(e.N), "N" + key(e.m, e.n));
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(secs < 1.0, "table runtime " + std::to_string(secs) + "s >= 1s");
    results.push_back(c.take());
  }

  // ---- 3. explicit orbit decompositions ----------------------------------
  std::map<std::pair<int, int>, Summary> sweep;
  {
    Checker c("3. explicit decompositions match, and agree with Burnside");
    std::vector<std::pair<int, int>> pairs;
    for (int n = 0;; ++n) {
      if (burnside::d_of(0, n) > kExplicitLimit) break;
      for (int m = 0; m <= 28; ++m)
        if (burnside::d_of(m, n) <= kExplicitLimit) pairs.emplace_back(m, n);
    }
    std::sort(pairs.begin(), pairs.end(), [](auto a, auto b) {
      return burnside::d_of(a.first, a.second) < burnside::d_of(b.first, b.second);
    });

    orbits::DecomposeOptions dopts;
    dopts.limit = kExplicitLimit;
    dopts.threads = opts.threads;
    for (auto [m, n] : pairs) {
      const Int d = burnside::d_of(m, n);
      log("decomposing P^" + key(m, n) + ", d = " + d.str());
      orbits::OrbitDecomposition dec;
      try {
        dec = orbits::decompose(gens, m, n, dopts);
      } catch (const std::exception& e) {
        c.fail("decompose" + key(m, n) + ": " + e.what());
        continue;
      }
      const Int n_burnside = burnside::count_orbits(census, m, n).N;
      c.require(Int(dec.orbit_sizes.size()) == n_burnside,
                key(m, n) + ": explicit orbit count vs Burnside");
      Int total = 0;
      for (std::uint64_t s : dec.orbit_sizes) {
        total += s;
        if (kGroupOrder % s != 0)
          c.fail(key(m, n) + ": orbit size " + std::to_string(s) + " does not divide |W|");
      }
      c.require(total == d, key(m, n) + ": orbit sizes sum to d");
      sweep[{m, n}] = Summary{dec.orbit_sizes, dec.representatives};
    }

    auto expect_sizes = [&](int m, int n, std::vector<std::uint64_t> want) {
      std::sort(want.begin(), want.end());
      const auto it = sweep.find({m, n});
      if (it == sweep.end()) {
        c.fail(key(m, n) + ": decomposition missing");
        return;
      }
      c.require(it->second.sizes == want, key(m, n) + ": published size multiset");
    };
    expect_sizes(4, 0, kSizes40);
    expect_sizes(0, 4, kSizes04);
    expect_sizes(2, 2, kSizes22);
    expect_sizes(6, 0, kSizes60);
    expect_sizes(0, 3, kSizes03);
    results.push_back(c.take());
  }

  // ---- 4. intersection-graph structure -----------------------------------
  {
    Checker c("4. triangles 2520/1260, quadruple partition, 945/1008 split");
    c.equal(intgraph::triangles_on_Y_count(dp), std::uint64_t{2520}, "triangles on Y");
    c.equal(tables.triangles.size(), std::size_t{1260}, "liftable triangles");
    c.equal(tables.quadruples.size(), std::size_t{315}, "quadruples");
    std::set<std::array<std::uint8_t, 3>> covered;
    for (const auto& q : tables.quadruples)
      for (int drop = 0; drop < 4; ++drop) {
        std::array<std::uint8_t, 3> t;
        for (int s = 0, w = 0; s < 4; ++s)
          if (s != drop) t[w++] = q[s];
        if (!covered.insert(t).second) c.fail("triangle in two quadruples");
      }
    c.equal(covered.size(), std::size_t{1260}, "4 * 315 triangles");
    for (const auto& t : tables.triangles)
      if (!covered.count(t)) c.fail("triangle not covered by a quadruple");
    int nb = 0, nc = 0, na = 0;
    for (int i = 0; i < 63; ++i)
      for (int j = i + 1; j < 63; ++j) {
        switch (tables.cc[i][j]) {
          case intgraph::CC::A: ++na; break;
          case intgraph::CC::B: ++nb; break;
          case intgraph::CC::C: ++nc; break;
        }
      }
    c.equal(na, 0, "off-diagonal A pairs");
    c.equal(nb, 945, "B pairs");
    c.equal(nc, 1008, "C pairs");
    c.equal(nb + nc, 1953, "distinct-class pairs");
    results.push_back(c.take());
  }

  // ---- 5. Table 5 statistics ----------------------------------------------
  {
    Checker c("5. (6,0) orbit statistics match Table 5");
    const auto it = sweep.find({6, 0});
    if (it == sweep.end()) {
      c.fail("missing (6,0) decomposition");
    } else {
      std::vector<Table5Row> rows;
      for (std::size_t i = 0; i < it->second.sizes.size(); ++i) {
        const auto st = intgraph::two_graph_stats(tables, it->second.reps[i]);
        rows.push_back({it->second.sizes[i], st.triangle_count, st.a0, st.a1, st.a2});
      }
      auto want = kTable5;
      std::sort(rows.begin(), rows.end());
      std::sort(want.begin(), want.end());
      c.require(rows == want, "row multiset");
      // The (size, |T|) signatures used to identify o1 and o2 must be
      // unique among the ten orbits.
      for (std::uint64_t size : {std::uint64_t{2016}, std::uint64_t{1008}}) {
        const auto matches = std::count_if(rows.begin(), rows.end(), [&](const Table5Row& r) {
          return r.size == size && r.t == 0;
        });
        c.require(matches == 1, "ambiguous (size,|T|) signature for size " + std::to_string(size));
      }
    }
    results.push_back(c.take());
  }

  // ---- 6. G counts ---------------------------------------------------------
  {
    Checker c("6. non-isomorphic intersection-graph counts");
    auto g_of = [&](int m, int n) -> long long {
      const auto it = sweep.find({m, n});
      if (it == sweep.end()) return -1;
      std::set<std::vector<std::uint8_t>> forms;
      for (const auto& rep : it->second.reps)
        forms.insert(intgraph::canonical_form(intgraph::graph_of(tables, rep)));
      return static_cast<long long>(forms.size());
    };
    for (int m = 1; m <= 14; ++m) c.equal(g_of(m, 0), kTable1G[m - 1], "G" + key(m, 0));
    for (int n = 1; n <= 5; ++n) c.equal(g_of(0, n), kTable2G[n - 1], "G" + key(0, n));
    for (const auto& e : kTable3)
      if (e.G >= 0) c.equal(g_of(e.m, e.n), e.G, "G" + key(e.m, e.n));
    results.push_back(c.take());
  }

  // ---- 7. the 22-line distinguishing statistic -----------------------------
  {
    Checker c("7. complements of o1/o2: |T| = 600, triples 8203640 / 8203760");
    const auto it = sweep.find({6, 0});
    if (it == sweep.end()) {
      c.fail("missing (6,0) decomposition");
    } else {
      auto rep_of_size = [&](std::uint64_t size) -> const Configuration* {
        for (std::size_t i = 0; i < it->second.sizes.size(); ++i)
          if (it->second.sizes[i] == size) return &it->second.reps[i];
        return nullptr;
      };
      struct Want {
        std::uint64_t orbit_size, triples;
      };
      for (const Want w : {Want{2016, 8203640}, Want{1008, 8203760}}) {
        const Configuration* rep = rep_of_size(w.orbit_size);
        if (!rep) {
          c.fail("no orbit of size " + std::to_string(w.orbit_size));
          continue;
        }
        const Configuration comp = orbits::complement(*rep);
        const auto st = intgraph::two_graph_stats(tables, comp);
        c.equal(st.triangle_count, std::uint64_t{600},
                "|T| of the size-" + std::to_string(w.orbit_size) + " complement");
        c.equal(intgraph::disjoint_triangle_triples(tables, comp), w.triples,
                "disjoint triples of the size-" + std::to_string(w.orbit_size) + " complement");
      }
    }
    results.push_back(c.take());
  }

  // ---- 8. cone census -------------------------------------------------------
  {
    Checker c("8. face census, 6A1~ configurations, low-degree roots");
    const auto faces = cone::clique_census(dp);
    const std::array<std::uint64_t, 7> want{56, 756, 4032, 10080, 12096, 6048, 576};
    for (int k = 1; k <= 7; ++k) c.equal(faces.count[k], want[k - 1], "k-cliques, k=" + std::to_string(k));
    try {
      // The builder enforces 6 pairs, 12 distinct lifts, the dual-graph
      // shape and the distinctness of the 12-sets, throwing otherwise.
      const auto configs = cone::six_a1_tilde_configs(dp);
      c.equal(configs.size(), std::size_t{126}, "6A1~ configurations");
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
    c.require(cone::low_degree_root_check(dp), "low_degree_root_check");
    results.push_back(c.take());
  }

  // ---- 9. property suites ----------------------------------------------------
  {
    Checker c("9. property suites (axioms, invariance, round-trips, determinism)");
    std::mt19937_64 rng(20778100);

    std::vector<weyl::GroupElement> pool;
    {
      weyl::GroupElement g = weyl::GroupElement::identity();
      for (int i = 0; i < 4096; ++i) {
        g = g.after(gens[rng() % gens.size()]);
        pool.push_back(g);
      }
    }
    auto random_element = [&]() -> const weyl::GroupElement& { return pool[rng() % pool.size()]; };

    for (int i = 0; i < 1000; ++i) {
      const auto &a = random_element(), &b = random_element(), &d = random_element();
      if (!(a.after(b).after(d) == a.after(b.after(d)))) c.fail("associativity");
      if (!a.after(a.inverse()).is_identity()) c.fail("inverse");
    }

    auto random_config = [&](int m, int n) {
      Configuration x;
      std::array<std::uint8_t, 28> deck;
      for (int i = 0; i < 28; ++i) deck[i] = static_cast<std::uint8_t>(i);
      for (int i = 0; i < m; ++i)
        std::swap(deck[i], deck[i + rng() % (28 - i)]);
      x.lines.assign(deck.begin(), deck.begin() + m);
      std::sort(x.lines.begin(), x.lines.end());
      for (int i = 0; i < n; ++i) x.conics.push_back(static_cast<std::uint8_t>(rng() % 63));
      std::sort(x.conics.begin(), x.conics.end());
      return x;
    };

    for (int i = 0; i < 1000; ++i) {
      const auto& g = random_element();
      const int ca = static_cast<int>(rng() % 63), cb = static_cast<int>(rng() % 63);
      if (tables.cc[ca][cb] != tables.cc[g.family_perm[ca]][g.family_perm[cb]])
        c.fail("cc label not invariant");
      const int l = static_cast<int>(rng() % 28);
      if (tables.lc[l][ca] != tables.lc[g.line_perm[l]][g.family_perm[ca]])
        c.fail("lc label not invariant");
      const int t1 = static_cast<int>(rng() % 28), t2 = static_cast<int>(rng() % 28),
                t3 = static_cast<int>(rng() % 28);
      if (t1 != t2 && t2 != t3 && t1 != t3) {
        if (tables.is_triangle(t1, t2, t3) !=
            tables.is_triangle(g.line_perm[t1], g.line_perm[t2], g.line_perm[t3]))
          c.fail("triangle membership not invariant");
      }
      const Configuration x = random_config(static_cast<int>(rng() % 5), static_cast<int>(rng() % 4));
      if (intgraph::canonical_form(intgraph::graph_of(tables, x)) !=
          intgraph::canonical_form(intgraph::graph_of(tables, orbits::apply(g, x))))
        c.fail("canonical form not invariant");
    }

    for (int i = 0; i < 10000; ++i) {
      const int m = static_cast<int>(rng() % 29);
      const int n = static_cast<int>(rng() % 4);
      const Configuration x = random_config(m, n);
      const std::uint64_t r = orbits::rank(x);
      if (!(orbits::unrank(r, m, n) == x)) c.fail("rank/unrank round trip");
    }

    {
      orbits::DecomposeOptions one, many;
      one.threads = 1;
      many.threads = std::max(2, opts.threads);
      const auto a = orbits::decompose(gens, 4, 0, one);
      const auto b = orbits::decompose(gens, 4, 0, many);
      c.require(orbits::to_json_string(a) == orbits::to_json_string(b),
                "decompose(4,0) thread determinism");
      const auto a2 = orbits::decompose(gens, 0, 3, one);
      const auto b2 = orbits::decompose(gens, 0, 3, many);
      c.require(orbits::to_json_string(a2) == orbits::to_json_string(b2),
                "decompose(0,3) thread determinism");
    }

    // count_orbits throws on a failed divisibility assertion.
    try {
      for (int m = 0; m <= 28; ++m)
        for (int n = 0; n <= 10; ++n) (void)burnside::count_orbits(census, m, n);
    } catch (const std::exception& e) {
      c.fail(std::string("Burnside divisibility: ") + e.what());
    }
    results.push_back(c.take());
  }

  return results;
}

}  // namespace quartic::verification
