#include "quartic/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "quartic/errors.hpp"

namespace quartic::weyl {

using lattice::Coord;
using lattice::DelPezzo;
using lattice::Lattice;
using lattice::Vec8;

lattice::Vec8 Reflection::apply(const Lattice& lat, const Vec8& x) const {
  const Coord c = lat.pair(x, root);
  Vec8 out;
  for (int i = 0; i < Lattice::rank; ++i) out[i] = x[i] + c * root[i];
  return out;
}

std::vector<Reflection> simple_reflections(const Lattice& lat) {
  std::vector<Reflection> rs;
  // A6 chain e_i - e_{i+1} plus one root with a nonzero e_0 part; with
  // h = (3,1,...,1) the latter is e_0 + e_1 + e_2 + e_3.
  for (int i = 1; i <= 6; ++i) {
    Vec8 r{};
    r[i] = 1;
    r[i + 1] = -1;
    rs.push_back({r});
  }
  rs.push_back({Vec8{1, 1, 1, 1, 0, 0, 0, 0}});
  for (const Reflection& r : rs) {
    if (lat.norm(r.root) != -2 || lat.pair(r.root, lat.h) != 0)
      throw InternalError("simple_reflections: bad root");
  }
  return rs;
}

GroupElement GroupElement::identity() {
  GroupElement g;
  std::iota(g.line_perm.begin(), g.line_perm.end(), 0);
  std::iota(g.family_perm.begin(), g.family_perm.end(), 0);
  return g;
}

bool GroupElement::is_identity() const { return *this == identity(); }

GroupElement GroupElement::after(const GroupElement& b) const {
  GroupElement out;
  for (int i = 0; i < 28; ++i) out.line_perm[i] = line_perm[b.line_perm[i]];
  for (int i = 0; i < 63; ++i) out.family_perm[i] = family_perm[b.family_perm[i]];
  return out;
}

GroupElement GroupElement::inverse() const {
  GroupElement out;
  for (int i = 0; i < 28; ++i) out.line_perm[line_perm[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < 63; ++i) out.family_perm[family_perm[i]] = static_cast<std::uint8_t>(i);
  return out;
}

GroupElement to_group_element(const Reflection& r, const DelPezzo& dp) {
  GroupElement g;
  for (int i = 0; i < 28; ++i) {
    const Vec8 image = r.apply(dp.lat, dp.Lbar.members[i]);
    const int j = dp.Lbar.index_of(std::min(image, dp.lat.iota(image)));
    if (j < 0) throw InternalError("to_group_element: image of a line class left Lbar");
    g.line_perm[i] = static_cast<std::uint8_t>(j);
  }
  for (int i = 0; i < 63; ++i) {
    const Vec8 image = r.apply(dp.lat, dp.Fbar.members[i]);
    const int j = dp.Fbar.index_of(std::min(image, dp.lat.iota(image)));
    if (j < 0) throw InternalError("to_group_element: image of a family class left Fbar");
    g.family_perm[i] = static_cast<std::uint8_t>(j);
  }
  return g;
}

std::vector<GroupElement> standard_generators(const DelPezzo& dp) {
  std::vector<GroupElement> gens;
  for (const Reflection& r : simple_reflections(dp.lat))
    gens.push_back(to_group_element(r, dp));
  return gens;
}

namespace {

// Open-addressing set over 91-byte permutations, keyed by index into an
// external pool.  Exact comparison on collision; no probabilistic dedup.
class PermSet {
 public:
  explicit PermSet(const std::vector<GroupElement>& pool) : pool_(pool) { rehash(1 << 16); }

  static std::uint64_t hash(const GroupElement& g) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the 91 bytes
    auto mix = [&h](std::uint8_t b) {
      h ^= b;
      h *= 1099511628211ull;
    };
    for (std::uint8_t b : g.line_perm) mix(b);
    for (std::uint8_t b : g.family_perm) mix(b);
    return h;
  }

  // True if g was absent; the caller must have already pushed g onto the
  // pool at position index.
  bool insert_if_new(const GroupElement& g, std::uint32_t index) {
    if ((size_ + 1) * 10 > slots_.size() * 7) rehash(slots_.size() * 2);
    std::size_t at = hash(g) & mask_;
    while (slots_[at] != kEmpty) {
      if (pool_[slots_[at]] == g) return false;
      at = (at + 1) & mask_;
    }
    slots_[at] = index;
    ++size_;
    return true;
  }

  std::size_t table_bytes() const { return slots_.size() * sizeof(std::uint32_t); }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void rehash(std::size_t n) {
    std::vector<std::uint32_t> old = std::move(slots_);
    slots_.assign(n, kEmpty);
    mask_ = n - 1;
    for (std::uint32_t idx : old) {
      if (idx == kEmpty) continue;
      std::size_t at = hash(pool_[idx]) & mask_;
      while (slots_[at] != kEmpty) at = (at + 1) & mask_;
      slots_[at] = idx;
    }
  }

  const std::vector<GroupElement>& pool_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace

std::uint64_t enumerate_group(const std::vector<GroupElement>& generators,
                              const EnumerationOptions& opts,
                              const std::function<void(const GroupElement&)>& visit) {
  std::vector<GroupElement> pool;
  pool.reserve(1 << 20);
  PermSet seen(pool);

  pool.push_back(GroupElement::identity());
  seen.insert_if_new(pool[0], 0);

  for (std::size_t head = 0; head < pool.size(); ++head) {
    if (visit) visit(pool[head]);
    for (const GroupElement& g : generators) {
      GroupElement next = pool[head].after(g);
      const auto index = static_cast<std::uint32_t>(pool.size());
      pool.push_back(next);
      if (!seen.insert_if_new(pool.back(), index)) pool.pop_back();
    }
    if ((head & 0xfff) == 0) {
      const std::size_t bytes = pool.capacity() * sizeof(GroupElement) + seen.table_bytes();
      if (bytes > opts.memory_budget_bytes)
        throw ResourceLimitError("enumerate_group: memory budget of " +
                                 std::to_string(opts.memory_budget_bytes) +
                                 " bytes exceeded with " + std::to_string(pool.size()) +
                                 " elements");
    }
    if (opts.progress && (head & 0x1ffff) == 0x1ffff) opts.progress(head + 1);
  }
  return pool.size();
}

std::uint64_t group_order(const std::vector<GroupElement>& generators,
                          const EnumerationOptions& opts) {
  return enumerate_group(generators, opts, nullptr);
}

template <std::size_t N>
std::vector<int> cycle_type(const std::array<std::uint8_t, N>& perm) {
  std::array<bool, N> done{};
  std::vector<int> lam;
  for (std::size_t i = 0; i < N; ++i) {
    if (done[i]) continue;
    int len = 0;
    for (std::size_t j = i; !done[j]; j = perm[j]) {
      done[j] = true;
      ++len;
    }
    lam.push_back(len);
  }
  std::sort(lam.rbegin(), lam.rend());
  return lam;
}

template std::vector<int> cycle_type<28>(const std::array<std::uint8_t, 28>&);
template std::vector<int> cycle_type<63>(const std::array<std::uint8_t, 63>&);

CycleCensus cycle_census(const std::vector<GroupElement>& generators,
                         const EnumerationOptions& opts) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> acc;
  const std::uint64_t order = enumerate_group(generators, opts, [&](const GroupElement& g) {
    ++acc[{cycle_type(g.line_perm), cycle_type(g.family_perm)}];
  });
  CycleCensus census;
  census.group_order = order;
  census.entries.reserve(acc.size());
  for (auto& [key, count] : acc)
    census.entries.push_back({key.first, key.second, count});
  return census;
}

std::uint64_t count_disjoint_seven_tuples(const DelPezzo& dp) {
  // Orthogonality masks over the 56 lifts; plain ordered DFS.
  const int n = dp.L.size();
  std::vector<std::uint64_t> orth(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && dp.L.pairing_table[i][j] == 0) orth[i] |= std::uint64_t{1} << j;

  std::uint64_t found = 0;
  auto dfs = [&](auto&& self, std::uint64_t candidates, int picked, int lowest) -> void {
    if (picked == 7) {
      ++found;
      return;
    }
    std::uint64_t cand = candidates & ~((std::uint64_t{1} << (lowest + 1)) - 1);
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, candidates & orth[v], picked + 1, v);
    }
  };
  dfs(dfs, ~std::uint64_t{0} >> (64 - n), 0, -1);
  return found;
}

bool order_consistency_check(const DelPezzo& dp) {
  const std::uint64_t tuples = count_disjoint_seven_tuples(dp);
  return tuples * 5040 == 2903040ull;
}

}  // namespace quartic::weyl
