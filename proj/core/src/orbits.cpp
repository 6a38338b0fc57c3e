#include "quartic/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "quartic/errors.hpp"

namespace quartic::orbits {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kSat - b) ? kSat : a + b;
}

// C(a, b) saturated at 2^64-1; a up to 255 covers every reachable
// universe (lines over 28, multiset images over 62+n with n < 194).
struct BinomTable {
  static constexpr int kMax = 256;
  std::vector<std::uint64_t> c;

  BinomTable() : c(kMax * kMax, 0) {
    for (int a = 0; a < kMax; ++a) {
      at(a, 0) = 1;
      for (int b = 1; b <= a; ++b)
        at(a, b) = sat_add(a > 0 ? at(a - 1, b - 1) : 0, a > 0 ? at(a - 1, b) : 0);
    }
  }
  std::uint64_t& at(int a, int b) { return c[static_cast<std::size_t>(a) * kMax + b]; }
  std::uint64_t operator()(int a, int b) const {
    if (b < 0 || a < 0 || b > a) return 0;
    return c[static_cast<std::size_t>(a) * kMax + b];
  }
};

const BinomTable& binom() {
  static const BinomTable t;
  return t;
}

// Lexicographic rank of a strictly increasing k-subset of {0..u-1}.
std::uint64_t subset_rank(const std::uint8_t* c, int k, int u) {
  const BinomTable& B = binom();
  std::uint64_t r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < c[i]; ++v) r = sat_add(r, B(u - 1 - v, k - 1 - i));
    prev = c[i];
  }
  return r;
}

void subset_unrank(std::uint64_t r, int k, int u, std::uint8_t* out) {
  const BinomTable& B = binom();
  int v = 0;
  for (int i = 0; i < k; ++i) {
    for (;; ++v) {
      if (v > u - (k - i)) throw std::invalid_argument("unrank: rank out of range");
      const std::uint64_t cnt = B(u - 1 - v, k - 1 - i);
      if (r < cnt) break;
      r -= cnt;
    }
    out[i] = static_cast<std::uint8_t>(v++);
  }
  if (r != 0) throw std::invalid_argument("unrank: rank out of range");
}

// Multisets of size n over {0..62} map to n-subsets of {0..62+n-1} by
// e_i = d_i + i, order-preservingly.
std::uint64_t multiset_rank(const std::uint8_t* d, int n) {
  std::uint8_t e[64];
  for (int i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>(d[i] + i);
  return subset_rank(e, n, 62 + n);
}

void multiset_unrank(std::uint64_t r, int n, std::uint8_t* out) {
  std::uint8_t e[64];
  subset_unrank(r, n, 62 + n, e);
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(e[i] - i);
}

void validate(const Configuration& x) {
  if (x.m() > 28) throw std::invalid_argument("configuration: more than 28 lines");
  for (int i = 0; i < x.m(); ++i) {
    if (x.lines[i] > 27 || (i > 0 && x.lines[i] <= x.lines[i - 1]))
      throw std::invalid_argument("configuration: lines not strictly increasing in 0..27");
  }
  if (x.n() > 63) throw std::invalid_argument("configuration: multiset size above 63 unsupported");
  for (int i = 0; i < x.n(); ++i) {
    if (x.conics[i] > 62 || (i > 0 && x.conics[i] < x.conics[i - 1]))
      throw std::invalid_argument("configuration: conics not weakly increasing in 0..62");
  }
}

std::uint64_t multiset_count(int n) {
  const std::uint64_t M = binom()(62 + n, n);
  if (M == kSat) throw std::invalid_argument("rank: 64-bit rank space exceeded");
  return M;
}

void map_and_sort(const std::uint8_t* perm, const std::uint8_t* in, int k, std::uint8_t* out) {
  for (int i = 0; i < k; ++i) {
    std::uint8_t v = perm[in[i]];
    int j = i;
    for (; j > 0 && out[j - 1] > v; --j) out[j] = out[j - 1];
    out[j] = v;
  }
}

}  // namespace

std::uint64_t rank(const Configuration& x) {
  validate(x);
  const std::uint64_t M = multiset_count(x.n());
  const std::uint64_t sr = subset_rank(x.lines.data(), x.m(), 28);
  const std::uint64_t mr = x.n() ? multiset_rank(x.conics.data(), x.n()) : 0;
  if (sr != 0 && sr > (kSat - mr) / M)
    throw std::invalid_argument("rank: 64-bit rank space exceeded");
  return sr * M + mr;
}

Configuration unrank(std::uint64_t r, int m, int n) {
  if (m < 0 || m > 28 || n < 0 || n > 63)
    throw std::invalid_argument("unrank: m in 0..28, n in 0..63 required");
  const std::uint64_t M = multiset_count(n);
  Configuration x;
  x.lines.resize(m);
  x.conics.resize(n);
  std::uint8_t buf[64];
  subset_unrank(r / M, m, 28, buf);
  std::copy_n(buf, m, x.lines.begin());
  if (n) {
    multiset_unrank(r % M, n, buf);
    std::copy_n(buf, n, x.conics.begin());
  } else if (r % M != 0) {
    throw std::invalid_argument("unrank: rank out of range");
  }
  return x;
}

Configuration apply(const weyl::GroupElement& g, const Configuration& x) {
  validate(x);
  Configuration y;
  y.lines.resize(x.m());
  y.conics.resize(x.n());
  if (x.m()) map_and_sort(g.line_perm.data(), x.lines.data(), x.m(), y.lines.data());
  if (x.n()) map_and_sort(g.family_perm.data(), x.conics.data(), x.n(), y.conics.data());
  return y;
}

Configuration complement(const Configuration& x) {
  validate(x);
  if (x.n() != 0) throw std::invalid_argument("complement: requires n = 0");
  Configuration y;
  y.lines.reserve(28 - x.m());
  for (std::uint8_t v = 0, i = 0; v < 28; ++v) {
    if (i < x.lines.size() && x.lines[i] == v)
      ++i;
    else
      y.lines.push_back(v);
  }
  return y;
}

namespace {

// Concurrent union-find: parents only decrease, links happen by CAS on a
// root, so the final partition is the connectivity of the edge set and
// independent of scheduling.  The final root of a component is its
// minimal element.
class ConcurrentDsu {
 public:
  explicit ConcurrentDsu(std::uint64_t n)
      : n_(n), parent_(std::make_unique<std::atomic<std::uint32_t>[]>(n)) {
    for (std::uint64_t i = 0; i < n; ++i)
      parent_[i].store(static_cast<std::uint32_t>(i), std::memory_order_relaxed);
  }

  std::uint32_t find(std::uint32_t x) {
    for (;;) {
      std::uint32_t p = parent_[x].load(std::memory_order_relaxed);
      if (p == x) return x;
      std::uint32_t gp = parent_[p].load(std::memory_order_relaxed);
      if (gp != p) parent_[x].store(gp, std::memory_order_relaxed);  // path halving
      x = gp;
    }
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    for (;;) {
      std::uint32_t ra = find(a);
      std::uint32_t rb = find(b);
      if (ra == rb) return;
      if (ra < rb) std::swap(ra, rb);  // attach the larger root under the smaller
      std::uint32_t expected = ra;
      if (parent_[ra].compare_exchange_weak(expected, rb, std::memory_order_relaxed))
        return;
    }
  }

  std::uint64_t size() const { return n_; }

 private:
  std::uint64_t n_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> parent_;
};

// Stack-allocated configuration used by the decomposition inner loop.
struct RawConfig {
  std::uint8_t lines[28];
  std::uint8_t conics[16];
};

// Lexicographic successor; returns false after the last configuration.
bool next_raw(RawConfig& x, int m, int n) {
  for (int j = n - 1; j >= 0; --j) {
    if (x.conics[j] < 62) {
      const std::uint8_t v = static_cast<std::uint8_t>(x.conics[j] + 1);
      for (int k = j; k < n; ++k) x.conics[k] = v;
      return true;
    }
  }
  for (int i = m - 1; i >= 0; --i) {
    if (x.lines[i] < 28 - (m - i)) {
      ++x.lines[i];
      for (int k = i + 1; k < m; ++k) x.lines[k] = static_cast<std::uint8_t>(x.lines[k - 1] + 1);
      for (int k = 0; k < n; ++k) x.conics[k] = 0;
      return true;
    }
  }
  return false;
}

// Prefix sums of the lex-rank summands: G[i][x] = sum_{v < x} C(u-1-v, k-1-i),
// so the rank contribution of element c_i after prev is G[i][c_i] - G[i][prev+1].
std::vector<std::uint64_t> rank_prefix_table(int u, int k) {
  const BinomTable& B = binom();
  std::vector<std::uint64_t> G(static_cast<std::size_t>(k) * (u + 1), 0);
  for (int i = 0; i < k; ++i) {
    std::uint64_t acc = 0;
    for (int x = 0; x <= u; ++x) {
      G[static_cast<std::size_t>(i) * (u + 1) + x] = acc;
      if (x < u) acc = sat_add(acc, B(u - 1 - x, k - 1 - i));
    }
  }
  return G;
}

}  // namespace

OrbitDecomposition decompose(const std::vector<weyl::GroupElement>& generators, int m,
                             int n, const DecomposeOptions& opts) {
  if (m < 0 || m > 28 || n < 0) throw std::invalid_argument("decompose: m in 0..28, n >= 0");
  if (opts.limit >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("decompose: limit must be below 2^32");

  // d^(m,n) with saturation; anything saturated is over any valid limit.
  const std::uint64_t M = (n <= 100) ? binom()(62 + n, n) : kSat;
  const std::uint64_t s = binom()(28, m);
  const std::uint64_t d = (M != 0 && s > kSat / M) ? kSat : s * M;
  if (d > opts.limit)
    throw ResourceLimitError("decompose: d^(" + std::to_string(m) + "," + std::to_string(n) +
                             ") = " + (d == kSat ? std::string("> 2^64") : std::to_string(d)) +
                             " exceeds the limit " + std::to_string(opts.limit));
  if (n > 16) throw std::invalid_argument("decompose: n too large");  // unreachable under 2^32

  ConcurrentDsu dsu(d);

  // Per-generator line actions as 28-bit masks, and prefix-sum rank
  // tables; the inner loop then runs on bit operations and table lookups.
  const std::size_t n_gens = generators.size();
  std::vector<std::array<std::uint32_t, 28>> line_bits(n_gens);
  for (std::size_t gi = 0; gi < n_gens; ++gi)
    for (int i = 0; i < 28; ++i)
      line_bits[gi][i] = std::uint32_t{1} << generators[gi].line_perm[i];
  const std::vector<std::uint64_t> line_G = rank_prefix_table(28, m);
  const std::vector<std::uint64_t> conic_G = rank_prefix_table(62 + n, n);

  auto mask_rank = [&](std::uint32_t mask) {
    std::uint64_t r = 0;
    int prev1 = 0;  // prev + 1
    const std::uint64_t* row = line_G.data();
    for (int i = 0; i < m; ++i, row += 29) {
      const int v = std::countr_zero(mask);
      mask &= mask - 1;
      r += row[v] - row[prev1];
      prev1 = v + 1;
    }
    return r;
  };
  auto conic_rank = [&](const std::uint8_t* c) {
    std::uint64_t r = 0;
    int prev1 = 0;
    const std::uint64_t* row = conic_G.data();
    for (int i = 0; i < n; ++i, row += 63 + n) {
      const int e = c[i] + i;  // strictly increasing image of the multiset
      r += row[e] - row[prev1];
      prev1 = e + 1;
    }
    return r;
  };

  const int threads = std::max(1, opts.threads);
  const std::uint64_t block = std::max<std::uint64_t>(1 << 14, d / (16u * threads) + 1);
  std::atomic<std::uint64_t> next_block{0};

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t lo = next_block.fetch_add(block);
      if (lo >= d) return;
      const std::uint64_t hi = std::min(d, lo + block);

      RawConfig cur;
      {
        Configuration c0 = unrank(lo, m, n);
        std::copy(c0.lines.begin(), c0.lines.end(), cur.lines);
        std::copy(c0.conics.begin(), c0.conics.end(), cur.conics);
      }
      std::uint8_t img_conics[16];
      for (std::uint64_t r = lo; r < hi; ++r) {
        std::uint32_t cur_mask = 0;
        for (int i = 0; i < m; ++i) cur_mask |= std::uint32_t{1} << cur.lines[i];
        for (std::size_t gi = 0; gi < n_gens; ++gi) {
          std::uint32_t img_mask = 0;
          for (std::uint32_t rest = cur_mask; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            img_mask |= line_bits[gi][v];
          }
          std::uint64_t r2 = mask_rank(img_mask);
          if (n) {
            map_and_sort(generators[gi].family_perm.data(), cur.conics, n, img_conics);
            r2 = r2 * M + conic_rank(img_conics);
          }
          if (r2 != r)
            dsu.unite(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r2));
        }
        next_raw(cur, m, n);
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Roots are orbit minima; collect sizes in root order.
  std::map<std::uint32_t, std::uint64_t> orbit;
  for (std::uint64_t r = 0; r < d; ++r) ++orbit[dsu.find(static_cast<std::uint32_t>(r))];

  OrbitDecomposition dec;
  dec.m = m;
  dec.n = n;
  dec.total = d;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> order;  // (size, root)
  order.reserve(orbit.size());
  for (const auto& [root, size] : orbit) order.emplace_back(size, root);
  std::sort(order.begin(), order.end());
  for (const auto& [size, root] : order) {
    dec.orbit_sizes.push_back(size);
    dec.representatives.push_back(unrank(root, m, n));
  }
  return dec;
}

std::vector<Configuration> orbit_of(const std::vector<weyl::GroupElement>& generators,
                                    const Configuration& x, std::uint64_t budget) {
  validate(x);
  auto key = [](const Configuration& c) {
    std::string k(c.lines.begin(), c.lines.end());
    k.push_back('\xff');
    k.append(c.conics.begin(), c.conics.end());
    return k;
  };
  std::unordered_set<std::string> seen;
  std::vector<Configuration> queue{x};
  seen.insert(key(x));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Configuration cur = queue[head];
    for (const auto& g : generators) {
      Configuration y = apply(g, cur);
      if (seen.insert(key(y)).second) {
        if (seen.size() > budget)
          throw ResourceLimitError("orbit_of: orbit exceeds the budget of " +
                                   std::to_string(budget) + " configurations");
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::string to_json_string(const OrbitDecomposition& dec) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : dec.representatives) {
    reps.push_back({{"lines", r.lines}, {"conics", r.conics}});
  }
  nlohmann::json j{{"m", dec.m},
                   {"n", dec.n},
                   {"d", dec.total},
                   {"orbit_sizes", dec.orbit_sizes},
                   {"representatives", reps}};
  return j.dump();
}

}  // namespace quartic::orbits
