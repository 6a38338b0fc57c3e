#include "quartic/burnside.hpp"

#include <algorithm>
#include <stdexcept>

#include "quartic/errors.hpp"

namespace quartic::burnside {

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int d_of(int m, long long n) {
  if (m < 0 || m > 28) throw std::invalid_argument("d_of: m must be in 0..28");
  if (n < 0) throw std::invalid_argument("d_of: n must be non-negative");
  return binomial(28, m) * binomial(n + 62, 62);
}

namespace {

// [x^m] of prod over cycle lengths of (1 + x^l).
Int fixed_subsets(const std::vector<int>& lam, int m) {
  std::vector<Int> p(m + 1);
  p[0] = 1;
  for (int l : lam) {
    for (int i = m - l; i >= 0; --i)
      if (!p[i].is_zero()) p[i + l] += p[i];
  }
  return p[m];
}

// [x^n] of prod over cycle lengths of 1/(1 - x^l).
Int fixed_multisets(const std::vector<int>& lam, long long n) {
  std::vector<Int> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int l : lam) {
    for (long long i = l; i <= n; ++i) p[i] += p[i - l];
  }
  return p[n];
}

}  // namespace

Int fixed_configs(const std::vector<int>& lam_L, const std::vector<int>& lam_F, int m,
                  long long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("fixed_configs: negative size");
  const Int a = fixed_subsets(lam_L, m);
  if (a.is_zero()) return 0;
  return a * fixed_multisets(lam_F, n);
}

CountResult count_orbits(const weyl::CycleCensus& census, int m, long long n) {
  CountResult res;
  res.d = d_of(m, n);
  Int sum = 0;
  for (const auto& e : census.entries)
    sum += Int(e.count) * fixed_configs(e.lam_L, e.lam_F, m, n);
  const Int order(census.group_order);
  if (order.is_zero() || sum % order != 0)
    throw InternalError("count_orbits: Burnside sum not divisible by the group order "
                        "(census corruption)");
  res.N = sum / order;
  return res;
}

CountTable count_table(const weyl::CycleCensus& census, int m_max, long long n_max) {
  if (m_max < 0 || m_max > 28) throw std::invalid_argument("count_table: m_max in 0..28");
  if (n_max < 0) throw std::invalid_argument("count_table: n_max non-negative");
  CountTable t;
  t.m_max = m_max;
  t.n_max = n_max;
  t.N.assign(m_max + 1, std::vector<Int>(n_max + 1));
  for (int m = 0; m <= m_max; ++m)
    for (long long n = 0; n <= n_max; ++n) t.N[m][n] = count_orbits(census, m, n).N;
  t.complement_symmetric = true;
  for (int m = 0; m <= 28; ++m) {
    if (count_orbits(census, m, 0).N != count_orbits(census, 28 - m, 0).N)
      t.complement_symmetric = false;
  }
  return t;
}

}  // namespace quartic::burnside
