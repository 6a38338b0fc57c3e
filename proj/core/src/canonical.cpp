#include <algorithm>
#include <numeric>
#include <string>

#include "quartic/errors.hpp"
#include "quartic/intgraph.hpp"

namespace quartic::intgraph {

namespace {

// Vertices are global ids: 0..m-1 the line vertices, m..m+n-1 the conic
// vertices.  An ordering induces a line bijection and a conic bijection
// by restriction; the encoding is the pentad pushed through those.
//
// Canonical form = minimum encoding over the leaves of an
// individualization-refinement tree.  Refinement is equivariant and the
// target cell is chosen invariantly, so the minimum is an isomorphism
// invariant; automorphisms discovered at equal-encoding leaves prune
// branches that can only replay an explored subtree.
class Canonicalizer {
 public:
  explicit Canonicalizer(const IntersectionGraph& g)
      : g_(g), m_(g.m), n_(g.n), V_(g.m + g.n) {
    tri_of_.assign(m_, {});
    for (std::size_t t = 0; t < g_.T.size(); ++t)
      for (std::uint8_t v : g_.T[t]) tri_of_[v].push_back(static_cast<int>(t));
    // Prefix sums for the lex rank of a position triple p<q<r:
    // rank = off2_[p] + off1_[q] - off1_[p+1] + (r - q - 1).
    off1_.assign(m_ + 2, 0);
    for (int x = 1; x <= m_ + 1; ++x) off1_[x] = off1_[x - 1] + (m_ - x);
    off2_.assign(m_ + 1, 0);
    for (int p = 1; p <= m_; ++p) {
      const long long rows = m_ - p;  // C(m-p, 2) triples starting at p-1
      off2_[p] = off2_[p - 1] + rows * (rows - 1) / 2;
    }
  }

  std::vector<std::uint8_t> run() {
    Partition pi = initial_partition();
    refine(pi);
    search(pi);
    return best_;
  }

 private:
  using Cell = std::vector<int>;
  using Partition = std::vector<Cell>;

  Partition initial_partition() const {
    Partition pi;
    if (m_ > 0) {
      Cell lines(m_);
      std::iota(lines.begin(), lines.end(), 0);
      pi.push_back(std::move(lines));
    }
    if (n_ > 0) {
      Cell conics(n_);
      std::iota(conics.begin(), conics.end(), m_);
      pi.push_back(std::move(conics));
    }
    return pi;
  }

  bool is_line(int v) const { return v < m_; }

  // Signature of a vertex with respect to the current ordered partition.
  // Layout depends only on the partition shape, so equal signatures mean
  // equivalent vertices under every relabeling respecting the partition.
  std::vector<long long> signature(const Partition& pi, const std::vector<int>& cell_of,
                                   int v) const {
    const int C = static_cast<int>(pi.size());
    std::vector<long long> sig;
    if (is_line(v)) {
      for (int ci = 0; ci < C; ++ci) {
        if (pi[ci].empty() || is_line(pi[ci][0])) continue;
        long long alpha = 0;
        for (int u : pi[ci])
          if (g_.elc[v][u - m_] == static_cast<std::uint8_t>(LC::Alpha)) ++alpha;
        sig.push_back(alpha);
      }
      // Triangle census by unordered cell pair of the other two vertices.
      std::vector<long long> counts(static_cast<std::size_t>(C) * C, 0);
      for (int t : tri_of_[v]) {
        int other[2], w = 0;
        for (std::uint8_t u : g_.T[t])
          if (static_cast<int>(u) != v) other[w++] = u;
        int a = cell_of[other[0]], b = cell_of[other[1]];
        if (a > b) std::swap(a, b);
        ++counts[static_cast<std::size_t>(a) * C + b];
      }
      for (int a = 0; a < C; ++a)
        for (int b = a; b < C; ++b) sig.push_back(counts[static_cast<std::size_t>(a) * C + b]);
    } else {
      const int vc = v - m_;
      for (int ci = 0; ci < C; ++ci) {
        if (pi[ci].empty()) continue;
        if (is_line(pi[ci][0])) {
          long long alpha = 0;
          for (int u : pi[ci])
            if (g_.elc[u][vc] == static_cast<std::uint8_t>(LC::Alpha)) ++alpha;
          sig.push_back(alpha);
        } else {
          long long na = 0, nb = 0, nc = 0;
          for (int u : pi[ci]) {
            if (u == v) continue;
            switch (static_cast<CC>(g_.ecc[vc][u - m_])) {
              case CC::A: ++na; break;
              case CC::B: ++nb; break;
              case CC::C: ++nc; break;
            }
          }
          sig.push_back(na);
          sig.push_back(nb);
          sig.push_back(nc);
        }
      }
    }
    return sig;
  }

  void refine(Partition& pi) const {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<int> cell_of(V_);
      for (int ci = 0; ci < static_cast<int>(pi.size()); ++ci)
        for (int v : pi[ci]) cell_of[v] = ci;

      for (int ci = 0; ci < static_cast<int>(pi.size()); ++ci) {
        if (pi[ci].size() < 2) continue;
        std::vector<std::pair<std::vector<long long>, int>> keyed;
        keyed.reserve(pi[ci].size());
        for (int v : pi[ci]) keyed.emplace_back(signature(pi, cell_of, v), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;

        Partition next;
        next.reserve(pi.size() + 2);
        for (int cj = 0; cj < ci; ++cj) next.push_back(std::move(pi[cj]));
        Cell cur;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i > 0 && keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(cur));
            cur.clear();
          }
          cur.push_back(keyed[i].second);
        }
        next.push_back(std::move(cur));
        for (int cj = ci + 1; cj < static_cast<int>(pi.size()); ++cj)
          next.push_back(std::move(pi[cj]));
        pi = std::move(next);
        changed = true;
        break;
      }
    }
  }

  void search(const Partition& pi) {
    int target = -1;
    for (int ci = 0; ci < static_cast<int>(pi.size()); ++ci) {
      if (pi[ci].size() >= 2) {
        target = ci;
        break;
      }
    }
    if (target < 0) {
      leaf(pi);
      return;
    }

    std::vector<int> tried;
    for (int v : pi[target]) {  // cells are kept sorted, so this is invariant
      if (in_tried_orbit(v, tried)) continue;
      Partition child;
      child.reserve(pi.size() + 1);
      for (int cj = 0; cj < target; ++cj) child.push_back(pi[cj]);
      child.push_back(Cell{v});
      Cell rest;
      for (int u : pi[target])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      for (int cj = target + 1; cj < static_cast<int>(pi.size()); ++cj)
        child.push_back(pi[cj]);

      refine(child);
      prefix_.push_back(v);
      search(child);
      prefix_.pop_back();
      tried.push_back(v);
    }
  }

  // Orbit closure of the tried candidates under the recorded
  // automorphisms that fix the individualized prefix pointwise; a sound
  // under-approximation of the stabilizer's orbits.
  bool in_tried_orbit(int v, const std::vector<int>& tried) const {
    if (tried.empty() || autos_.empty()) return false;
    std::vector<int> root(V_);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const auto& gamma : autos_) {
      bool fixes_prefix = true;
      for (int u : prefix_)
        if (gamma[u] != u) {
          fixes_prefix = false;
          break;
        }
      if (!fixes_prefix) continue;
      for (int x = 0; x < V_; ++x) {
        int a = find(x), b = find(gamma[x]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
    const int rv = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == rv; });
  }

  void leaf(const Partition& pi) {
    std::vector<int> order;
    order.reserve(V_);
    for (const Cell& c : pi) order.push_back(c[0]);

    std::vector<int> line_pos(m_), conic_pos(n_);
    int lp = 0, cp = 0;
    for (int v : order) {
      if (is_line(v))
        line_pos[v] = lp++;
      else
        conic_pos[v - m_] = cp++;
    }
    std::vector<std::uint8_t> enc = encode(line_pos, conic_pos);

    if (!have_best_ || enc < best_) {
      best_ = std::move(enc);
      best_order_ = order;
      have_best_ = true;
      return;
    }
    if (enc == best_ && autos_.size() < kMaxAutos) {
      std::vector<int> gamma(V_);
      bool identity = true;
      for (int p = 0; p < V_; ++p) {
        gamma[best_order_[p]] = order[p];
        identity = identity && best_order_[p] == order[p];
      }
      if (!identity &&
          std::find(autos_.begin(), autos_.end(), gamma) == autos_.end())
        autos_.push_back(std::move(gamma));
    }
  }

  std::vector<std::uint8_t> encode(const std::vector<int>& line_pos,
                                   const std::vector<int>& conic_pos) const {
    std::vector<std::uint8_t> out;
    const int triples = m_ >= 3 ? static_cast<int>(off2_[m_]) : 0;
    out.reserve(2 + (triples + 7) / 8 + n_ * n_ + m_ * n_);
    out.push_back(static_cast<std::uint8_t>(m_));
    out.push_back(static_cast<std::uint8_t>(n_));

    std::vector<std::uint8_t> bits((triples + 7) / 8, 0);
    for (const auto& t : g_.T) {
      int p = line_pos[t[0]], q = line_pos[t[1]], r = line_pos[t[2]];
      if (p > q) std::swap(p, q);
      if (q > r) std::swap(q, r);
      if (p > q) std::swap(p, q);
      const long long idx = off2_[p] + off1_[q] - off1_[p + 1] + (r - q - 1);
      bits[idx >> 3] |= static_cast<std::uint8_t>(1u << (idx & 7));
    }
    out.insert(out.end(), bits.begin(), bits.end());

    std::vector<int> conic_at(n_), line_at(m_);
    for (int i = 0; i < n_; ++i) conic_at[conic_pos[i]] = i;
    for (int i = 0; i < m_; ++i) line_at[line_pos[i]] = i;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) out.push_back(g_.ecc[conic_at[i]][conic_at[j]]);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) out.push_back(g_.elc[line_at[i]][conic_at[j]]);
    return out;
  }

  static constexpr std::size_t kMaxAutos = 256;

  const IntersectionGraph& g_;
  int m_, n_, V_;
  std::vector<std::vector<int>> tri_of_;
  std::vector<long long> off1_, off2_;

  std::vector<std::uint8_t> best_;
  bool have_best_ = false;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> autos_;
  std::vector<int> prefix_;
};

}  // namespace

std::vector<std::uint8_t> canonical_form(const IntersectionGraph& g, int max_vertices) {
  if (g.m + g.n > max_vertices)
    throw ResourceLimitError("canonical_form: " + std::to_string(g.m + g.n) +
                             " vertices exceed the bound " + std::to_string(max_vertices));
  return Canonicalizer(g).run();
}

std::vector<std::uint8_t> canonical_form_bruteforce(const IntersectionGraph& g) {
  if (g.m + g.n > 8)
    throw ResourceLimitError("canonical_form_bruteforce: supports m + n <= 8 only");
  std::vector<int> lp(g.m), cp(g.n);
  std::iota(lp.begin(), lp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);

  std::vector<std::uint8_t> best;
  bool have = false;
  // Encoding logic duplicated from the canonicalizer's leaf encoder but
  // over raw permutations, as an independent oracle path.
  auto encode = [&g](const std::vector<int>& line_pos, const std::vector<int>& conic_pos) {
    std::vector<std::uint8_t> out{static_cast<std::uint8_t>(g.m),
                                  static_cast<std::uint8_t>(g.n)};
    std::vector<std::uint8_t> tri;
    for (int p = 0; p < g.m; ++p)
      for (int q = p + 1; q < g.m; ++q)
        for (int r = q + 1; r < g.m; ++r) tri.push_back(0);
    auto tri_index = [&g](int p, int q, int r) {
      int idx = 0;
      for (int a = 0; a < g.m; ++a)
        for (int b = a + 1; b < g.m; ++b)
          for (int c = b + 1; c < g.m; ++c) {
            if (a == p && b == q && c == r) return idx;
            ++idx;
          }
      return -1;
    };
    for (const auto& t : g.T) {
      int p = line_pos[t[0]], q = line_pos[t[1]], r = line_pos[t[2]];
      if (p > q) std::swap(p, q);
      if (q > r) std::swap(q, r);
      if (p > q) std::swap(p, q);
      tri[tri_index(p, q, r)] = 1;
    }
    std::size_t packed = (tri.size() + 7) / 8;
    std::vector<std::uint8_t> bits(packed, 0);
    for (std::size_t i = 0; i < tri.size(); ++i)
      if (tri[i]) bits[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
    out.insert(out.end(), bits.begin(), bits.end());
    std::vector<int> conic_at(g.n), line_at(g.m);
    for (int i = 0; i < g.n; ++i) conic_at[conic_pos[i]] = i;
    for (int i = 0; i < g.m; ++i) line_at[line_pos[i]] = i;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) out.push_back(g.ecc[conic_at[i]][conic_at[j]]);
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.n; ++j) out.push_back(g.elc[line_at[i]][conic_at[j]]);
    return out;
  };

  std::sort(lp.begin(), lp.end());
  do {
    std::vector<int> cp_iter = cp;
    std::sort(cp_iter.begin(), cp_iter.end());
    do {
      auto enc = encode(lp, cp_iter);
      if (!have || enc < best) {
        best = std::move(enc);
        have = true;
      }
    } while (std::next_permutation(cp_iter.begin(), cp_iter.end()));
  } while (std::next_permutation(lp.begin(), lp.end()));
  return best;
}

}  // namespace quartic::intgraph
