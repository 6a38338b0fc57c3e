#include "quartic/census_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "quartic/errors.hpp"

namespace quartic::weyl {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "quartic-census-v1";

json vec_to_json(const lattice::Vec8& v) { return json(std::vector<long long>(v.begin(), v.end())); }

json header_json(const CycleCensus& census, const lattice::DelPezzo& dp,
                 const std::vector<Reflection>& generators) {
  json gram = json::array();
  for (const auto& row : dp.lat.gram)
    gram.push_back(std::vector<long long>(row.begin(), row.end()));
  json gens = json::array();
  for (const Reflection& r : generators) gens.push_back(vec_to_json(r.root));
  json lbar = json::array(), fbar = json::array();
  for (const auto& v : dp.Lbar.members) lbar.push_back(vec_to_json(v));
  for (const auto& v : dp.Fbar.members) fbar.push_back(vec_to_json(v));
  return json{{"format", kFormat},
              {"group_order", census.group_order},
              {"generators", gens},
              {"gram", gram},
              {"h", vec_to_json(dp.lat.h)},
              {"Lbar", lbar},
              {"Fbar", fbar}};
}

}  // namespace

std::string census_to_jsonl(const CycleCensus& census, const lattice::DelPezzo& dp,
                            const std::vector<Reflection>& generators) {
  std::ostringstream out;
  out << header_json(census, dp, generators).dump() << '\n';
  for (const auto& e : census.entries) {
    out << json{{"lam_L", e.lam_L}, {"lam_F", e.lam_F}, {"count", e.count}}.dump() << '\n';
  }
  return out.str();
}

CycleCensus census_from_jsonl(const std::string& text, const lattice::DelPezzo& dp,
                              const std::vector<Reflection>& generators) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InternalError("census: empty cache");

  json header = json::parse(line, nullptr, false);
  if (header.is_discarded()) throw InternalError("census: malformed header");

  CycleCensus census;
  census.group_order = header.value("group_order", std::uint64_t{0});
  json expected = header_json(census, dp, generators);
  if (header != expected)
    throw CacheMismatchError("census: cache fingerprint does not match the current build");

  std::uint64_t total = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded()) throw InternalError("census: malformed record");
    CycleCensus::Entry e;
    e.lam_L = rec.at("lam_L").get<std::vector<int>>();
    e.lam_F = rec.at("lam_F").get<std::vector<int>>();
    e.count = rec.at("count").get<std::uint64_t>();
    auto check_partition = [](const std::vector<int>& lam, int n) {
      if (std::accumulate(lam.begin(), lam.end(), 0) != n) return false;
      return std::is_sorted(lam.rbegin(), lam.rend());
    };
    if (!check_partition(e.lam_L, 28) || !check_partition(e.lam_F, 63))
      throw InternalError("census: record is not a partition of 28 resp. 63");
    total += e.count;
    census.entries.push_back(std::move(e));
  }
  if (total != census.group_order)
    throw InternalError("census: multiplicities do not sum to the group order");
  if (!std::is_sorted(census.entries.begin(), census.entries.end(),
                      [](const auto& a, const auto& b) {
                        return std::tie(a.lam_L, a.lam_F) < std::tie(b.lam_L, b.lam_F);
                      }))
    throw InternalError("census: entries out of order");
  return census;
}

void save_census(const std::string& path, const CycleCensus& census,
                 const lattice::DelPezzo& dp, const std::vector<Reflection>& generators) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("census: cannot write " + path);
  out << census_to_jsonl(census, dp, generators);
}

CycleCensus load_census(const std::string& path, const lattice::DelPezzo& dp,
                        const std::vector<Reflection>& generators) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("census: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return census_from_jsonl(buf.str(), dp, generators);
}

}  // namespace quartic::weyl
