#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quartic/weyl.hpp"

namespace quartic::burnside {

using Int = boost::multiprecision::cpp_int;

Int binomial(long long n, long long k);

// |P^(m,n)| = C(28,m) * C(n+62,62).  Throws std::invalid_argument
// outside 0 <= m <= 28, n >= 0.
Int d_of(int m, long long n);

// Number of configurations fixed by an element with the given cycle
// types: [x^m] prod (1+x^l) over lam_L times [x^n] prod (1-x^l)^-1 over
// lam_F.
Int fixed_configs(const std::vector<int>& lam_L, const std::vector<int>& lam_F, int m,
                  long long n);

struct CountResult {
  Int d;
  Int N;
};

// Burnside's lemma over the census.  Throws InternalError if the sum is
// not divisible by the group order.
CountResult count_orbits(const weyl::CycleCensus& census, int m, long long n);

struct CountTable {
  int m_max = 0;
  long long n_max = 0;
  std::vector<std::vector<Int>> N;  // N[m][n]
  bool complement_symmetric = false;  // N(m,0) == N(28-m,0) for all m
};

CountTable count_table(const weyl::CycleCensus& census, int m_max, long long n_max);

}  // namespace quartic::burnside
