#pragma once

#include <random>

#include "quartic/intgraph.hpp"
#include "quartic/weyl.hpp"

// Shared per-binary singletons; the census costs a few seconds and is
// built lazily so suites that skip it stay fast.
namespace fixtures {

inline const quartic::lattice::DelPezzo& dp() {
  static const auto value = quartic::lattice::DelPezzo::build();
  return value;
}

inline const std::vector<quartic::weyl::Reflection>& roots() {
  static const auto value = quartic::weyl::simple_reflections(dp().lat);
  return value;
}

inline const std::vector<quartic::weyl::GroupElement>& gens() {
  static const auto value = quartic::weyl::standard_generators(dp());
  return value;
}

inline const quartic::weyl::CycleCensus& census() {
  static const auto value = quartic::weyl::cycle_census(gens());
  return value;
}

inline const quartic::intgraph::EdgeTables& tables() {
  static const auto value = quartic::intgraph::EdgeTables::build(dp());
  return value;
}

inline quartic::weyl::GroupElement random_element(std::mt19937_64& rng, int length = 16) {
  auto g = quartic::weyl::GroupElement::identity();
  for (int i = 0; i < length; ++i) g = g.after(gens()[rng() % gens().size()]);
  return g;
}

}  // namespace fixtures
