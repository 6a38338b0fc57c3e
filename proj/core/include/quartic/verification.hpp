#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quartic/lattice.hpp"
#include "quartic/weyl.hpp"

namespace quartic::verification {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on success, first mismatch otherwise
};

struct Options {
  int threads = 1;
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
  std::ostream* progress = nullptr;
};

// The lattice/cone cardinality checks behind `lattice verify`.  Re-derives
// the sets from dp.lat, so a corrupted basis fails loudly.
std::vector<CheckResult> lattice_verify(const lattice::DelPezzo& dp);

// The full regression suite: one result per criterion, in order.
// Criterion 3 explicitly decomposes every P^(m,n) with d^(m,n) <= 5*10^7;
// expect minutes of runtime.  An existing census can be supplied to skip
// the rebuild.
std::vector<CheckResult> acceptance_suite(const Options& opts,
                                          const weyl::CycleCensus* census = nullptr);

}  // namespace quartic::verification
