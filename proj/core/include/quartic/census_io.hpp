#pragma once

#include <string>

#include "quartic/lattice.hpp"
#include "quartic/weyl.hpp"

namespace quartic::weyl {

// Line-delimited JSON: one header record carrying the group order, the
// generator roots and the lattice basis fingerprint (gram matrix, h,
// ordered Lbar/Fbar representative lists), then one record per census
// entry {"lam_L": [...], "lam_F": [...], "count": n}.
std::string census_to_jsonl(const CycleCensus& census, const lattice::DelPezzo& dp,
                            const std::vector<Reflection>& generators);

// Parses and validates a census cache.  Throws CacheMismatchError if the
// header fingerprint does not match the current build, InternalError on
// malformed or inconsistent records.
CycleCensus census_from_jsonl(const std::string& text, const lattice::DelPezzo& dp,
                              const std::vector<Reflection>& generators);

void save_census(const std::string& path, const CycleCensus& census,
                 const lattice::DelPezzo& dp, const std::vector<Reflection>& generators);

CycleCensus load_census(const std::string& path, const lattice::DelPezzo& dp,
                        const std::vector<Reflection>& generators);

}  // namespace quartic::weyl
