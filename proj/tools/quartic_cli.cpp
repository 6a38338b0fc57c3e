// quartic: orbit and invariant computations for configurations of
// bitangent classes and conic-family classes under the Weyl group action.
//
// Subcommands: lattice verify, census build, count, table, orbits,
// graphs count, graphs stats, cone faces, paper-check.
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "quartic/burnside.hpp"
#include "quartic/census_io.hpp"
#include "quartic/cone.hpp"
#include "quartic/errors.hpp"
#include "quartic/intgraph.hpp"
#include "quartic/orbits.hpp"
#include "quartic/verification.hpp"
#include "quartic/weyl.hpp"

namespace {

using namespace quartic;

struct RunConfig {
  std::string census_path;
  std::uint64_t orbit_limit = 50'000'000;
  std::size_t memory_budget = std::size_t{2} << 30;
  std::string threads = "auto";
  std::string format = "text";
  std::string out_path;

  int thread_count() const {
    if (threads == "auto") {
      const unsigned hw = std::thread::hardware_concurrency();
      return hw ? static_cast<int>(hw) : 1;
    }
    const int t = std::stoi(threads);
    if (t < 1) throw CLI::ValidationError("--threads", "must be positive or 'auto'");
    return t;
  }

  std::ostream& open_out(std::ofstream& file) const {
    if (out_path.empty()) return std::cout;
    file.open(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    return file;
  }
};

// Built lazily; the heavyweight census only when a subcommand needs it.
struct Engine {
  const RunConfig& cfg;
  lattice::DelPezzo dp = lattice::DelPezzo::build();
  std::vector<weyl::Reflection> roots = weyl::simple_reflections(dp.lat);
  std::vector<weyl::GroupElement> gens = weyl::standard_generators(dp);

  explicit Engine(const RunConfig& c) : cfg(c) {}

  weyl::CycleCensus build_census() const {
    weyl::EnumerationOptions opts;
    opts.memory_budget_bytes = cfg.memory_budget;
    opts.progress = [](std::uint64_t count) {
      std::cerr << "\rcensus: " << count << " elements" << std::flush;
    };
    std::cerr << "building cycle census..." << std::endl;
    auto census = weyl::cycle_census(gens, opts);
    std::cerr << "\rcensus: " << census.group_order << " elements, "
              << census.entries.size() << " cycle-type keys" << std::endl;
    return census;
  }

  weyl::CycleCensus census() const {
    if (cfg.census_path.empty()) return build_census();
    if (std::filesystem::exists(cfg.census_path))
      return weyl::load_census(cfg.census_path, dp, roots);
    auto census = build_census();
    weyl::save_census(cfg.census_path, census, dp, roots);
    std::cerr << "census written to " << cfg.census_path << std::endl;
    return census;
  }
};

std::string int_str(const burnside::Int& v) { return v.str(); }

int cmd_lattice_verify(const RunConfig& cfg, bool corrupt) {
  auto dp = lattice::DelPezzo::build();
  if (corrupt) dp.lat.h = {3, 1, 1, 1, 1, 1, 1, 2};  // test mode: break the basis
  std::ofstream file;
  std::ostream& out = cfg.open_out(file);
  bool all = true;
  for (const auto& r : verification::lattice_verify(dp)) {
    all = all && r.passed;
    out << r.name << (r.passed ? " OK" : " FAIL") ;
    if (!r.passed) out << "  [" << r.detail << "]";
    out << '\n';
  }
  return all ? 0 : 1;
}

int cmd_census_build(const RunConfig& cfg) {
  Engine e(cfg);
  auto census = e.build_census();
  if (cfg.census_path.empty() && cfg.out_path.empty())
    throw CLI::ValidationError("census build", "give --census or --out for the cache path");
  const std::string path = cfg.out_path.empty() ? cfg.census_path : cfg.out_path;
  weyl::save_census(path, census, e.dp, e.roots);
  std::cerr << "census written to " << path << std::endl;
  return 0;
}

int cmd_count(const RunConfig& cfg, int m, long long n) {
  Engine e(cfg);
  const auto census = e.census();
  const auto res = burnside::count_orbits(census, m, n);
  std::ofstream file;
  std::ostream& out = cfg.open_out(file);
  if (cfg.format == "json") {
    out << "{\"N\":" << int_str(res.N) << ",\"d\":" << int_str(res.d) << ",\"m\":" << m
        << ",\"n\":" << n << "}\n";
  } else if (cfg.format == "csv") {
    out << "m,n,d,N\n" << m << ',' << n << ',' << int_str(res.d) << ',' << int_str(res.N) << '\n';
  } else {
    out << int_str(res.N) << '\n';
  }
  return 0;
}

int cmd_table(const RunConfig& cfg, int m_max, long long n_max) {
  Engine e(cfg);
  const auto census = e.census();
  const auto table = burnside::count_table(census, m_max, n_max);
  std::ofstream file;
  std::ostream& out = cfg.open_out(file);
  if (cfg.format == "json") {
    out << "{\"N\":[";
    for (int m = 0; m <= m_max; ++m) {
      out << (m ? ",[" : "[");
      for (long long n = 0; n <= n_max; ++n)
        out << (n ? "," : "") << int_str(table.N[m][n]);
      out << "]";
    }
    out << "],\"complement_symmetric\":" << (table.complement_symmetric ? "true" : "false")
        << ",\"m_max\":" << m_max << ",\"n_max\":" << n_max << "}\n";
  } else if (cfg.format == "csv") {
    out << "m\\n";
    for (long long n = 0; n <= n_max; ++n) out << ',' << n;
    out << '\n';
    for (int m = 0; m <= m_max; ++m) {
      out << m;
      for (long long n = 0; n <= n_max; ++n) out << ',' << int_str(table.N[m][n]);
      out << '\n';
    }
  } else {
    for (int m = 0; m <= m_max; ++m) {
      out << "m=" << m << ":";
      for (long long n = 0; n <= n_max; ++n) out << ' ' << int_str(table.N[m][n]);
      out << '\n';
    }
    out << "complement symmetry N(m,0) == N(28-m,0): "
        << (table.complement_symmetric ? "holds" : "VIOLATED") << '\n';
  }
  return 0;
}

int cmd_orbits(const RunConfig& cfg, int m, int n) {
  Engine e(cfg);
  orbits::DecomposeOptions opts;
  opts.limit = cfg.orbit_limit;
  opts.threads = cfg.thread_count();
  const auto dec = orbits::decompose(e.gens, m, n, opts);
  std::ofstream file;
  std::ostream& out = cfg.open_out(file);
  if (cfg.format == "json") {
    out << orbits::to_json_string(dec) << '\n';
  } else if (cfg.format == "csv") {
    out << "size,lines,conics\n";
    for (std::size_t i = 0; i < dec.orbit_sizes.size(); ++i) {
      out << dec.orbit_sizes[i] << ",\"";
      for (std::size_t k = 0; k < dec.representatives[i].lines.size(); ++k)
        out << (k ? " " : "") << int(dec.representatives[i].lines[k]);
      out << "\",\"";
      for (std::size_t k = 0; k < dec.representatives[i].conics.size(); ++k)
        out << (k ? " " : "") << int(dec.representatives[i].conics[k]);
      out << "\"\n";
    }
  } else {
    out << "d = " << dec.total << ", orbits = " << dec.orbit_sizes.size() << '\n';
    for (std::size_t i = 0; i < dec.orbit_sizes.size(); ++i) {
      out << "  " << dec.orbit_sizes[i] << "  lines[";
      for (std::size_t k = 0; k < dec.representatives[i].lines.size(); ++k)
        out << (k ? " " : "") << int(dec.representatives[i].lines[k]);
      out << "] conics[";
      for (std::size_t k = 0; k < dec.representatives[i].conics.size(); ++k)
        out << (k ? " " : "") << int(dec.representatives[i].conics[k]);
      out << "]\n";
    }
  }
  return 0;
}

int cmd_graphs(const RunConfig& cfg, int m, int n, bool stats) {
  Engine e(cfg);
  const auto tables = intgraph::EdgeTables::build(e.dp);
  orbits::DecomposeOptions opts;
  opts.limit = cfg.orbit_limit;
  opts.threads = cfg.thread_count();
  const auto dec = orbits::decompose(e.gens, m, n, opts);
  std::ofstream file;
  std::ostream& out = cfg.open_out(file);
  if (!stats) {
    const std::uint64_t g = intgraph::count_graphs(tables, dec);
    if (cfg.format == "json")
      out << "{\"G\":" << g << ",\"N\":" << dec.orbit_sizes.size() << ",\"m\":" << m
          << ",\"n\":" << n << "}\n";
    else
      out << g << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < dec.orbit_sizes.size(); ++i) {
    const auto& rep = dec.representatives[i];
    const auto graph = intgraph::graph_of(tables, rep);
    const auto canon = intgraph::canonical_form(graph);
    if (cfg.format == "json") {
      out << "{\"orbit_size\":" << dec.orbit_sizes[i]
          << ",\"graph\":" << intgraph::graph_json_string(graph, canon);
      if (n == 0) {
        const auto st = intgraph::two_graph_stats(tables, rep);
        out << ",\"two_graph\":{\"T\":" << st.triangle_count << ",\"a0\":" << st.a0
            << ",\"a1\":" << st.a1 << ",\"a2\":" << st.a2 << "}";
      }
      out << "}\n";
    } else {
      out << "orbit " << dec.orbit_sizes[i] << ": |T| = " << graph.T.size();
      if (n == 0) {
        const auto st = intgraph::two_graph_stats(tables, rep);
        out << " (a0,a1,a2) = (" << st.a0 << "," << st.a1 << "," << st.a2 << ")";
      }
      out << '\n';
    }
  }
  return 0;
}

int cmd_cone_faces(const RunConfig& cfg) {
  auto dp = lattice::DelPezzo::build();
  const auto faces = cone::clique_census(dp);
  const auto configs = cone::six_a1_tilde_configs(dp);
  std::ofstream file;
  std::ostream& out = cfg.open_out(file);
  out << "{\"faces_by_dim\":{";
  for (int k = 1; k <= 6; ++k)
    out << "\"" << 8 - k << "\":" << faces.count[k] << ",";
  out << "\"1\":{\"7A1\":" << faces.count[7] << ",\"6A1tilde\":" << configs.size() << "}}}"
      << '\n';
  return 0;
}

int cmd_paper_check(const RunConfig& cfg) {
  verification::Options opts;
  opts.threads = cfg.thread_count();
  opts.memory_budget_bytes = cfg.memory_budget;
  opts.progress = &std::cerr;

  weyl::CycleCensus census;
  const weyl::CycleCensus* census_ptr = nullptr;
  if (!cfg.census_path.empty() && std::filesystem::exists(cfg.census_path)) {
    auto dp = lattice::DelPezzo::build();
    census = weyl::load_census(cfg.census_path, dp, weyl::simple_reflections(dp.lat));
    census_ptr = &census;
  }

  const auto results = verification::acceptance_suite(opts, census_ptr);
  std::ofstream file;
  std::ostream& out = cfg.open_out(file);
  bool all = true;
  int idx = 0;
  for (const auto& r : results) {
    ++idx;
    all = all && r.passed;
    out << "[" << idx << "/" << results.size() << "] " << r.name << " ... "
        << (r.passed ? "PASS" : "FAIL") << '\n';
    if (!r.passed) out << "      " << r.detail << '\n';
  }
  out << (all ? "all checks passed" : "CHECKS FAILED") << '\n';
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"configuration orbits of quartic-curve bitangents and 4-tangent conics"};
  app.require_subcommand(1);
  app.add_option("--census", cfg.census_path, "census cache path (built on first use)");
  app.add_option("--limit", cfg.orbit_limit, "explicit-enumeration limit for d^(m,n)")
      ->check(CLI::Range(std::uint64_t{1}, (std::uint64_t{1} << 32) - 1));
  app.add_option("--threads", cfg.threads, "worker threads, or 'auto'");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out_path, "write output to a file instead of stdout");
  app.add_option("--memory-budget", cfg.memory_budget, "group-enumeration memory budget, bytes");

  // lattice verify
  auto* lattice_cmd = app.add_subcommand("lattice", "lattice-level checks");
  auto* verify_cmd = lattice_cmd->add_subcommand("verify", "run all cardinality checks");
  bool corrupt = false;
  verify_cmd->add_flag("--inject-corrupt-basis", corrupt, "test mode: corrupt h before checking")
      ->group("");  // hidden
  lattice_cmd->require_subcommand(1);

  // census build
  auto* census_cmd = app.add_subcommand("census", "cycle-census cache management");
  auto* build_cmd = census_cmd->add_subcommand("build", "enumerate the group and write the cache");
  census_cmd->require_subcommand(1);

  int m = 0;
  long long n = 0;
  auto* count_cmd = app.add_subcommand("count", "orbit count N^(m,n) via Burnside");
  count_cmd->add_option("m", m, "number of bitangent classes")->required()->check(CLI::Range(0, 28));
  count_cmd->add_option("n", n, "number of conic-family classes")
      ->required()
      ->check(CLI::NonNegativeNumber);

  int m_max = 0;
  long long n_max = 0;
  auto* table_cmd = app.add_subcommand("table", "table of N^(m,n)");
  table_cmd->add_option("m_max", m_max, "largest m")->required()->check(CLI::Range(0, 28));
  table_cmd->add_option("n_max", n_max, "largest n")->required()->check(CLI::NonNegativeNumber);

  int om = 0, on = 0;
  auto* orbits_cmd = app.add_subcommand("orbits", "explicit orbit decomposition of P^(m,n)");
  orbits_cmd->add_option("m", om, "")->required()->check(CLI::Range(0, 28));
  orbits_cmd->add_option("n", on, "")->required()->check(CLI::Range(0, 63));

  int gm = 0, gn = 0;
  auto* graphs_cmd = app.add_subcommand("graphs", "intersection-graph computations");
  auto* gcount_cmd = graphs_cmd->add_subcommand("count", "number of non-isomorphic graphs");
  gcount_cmd->add_option("m", gm, "")->required()->check(CLI::Range(0, 28));
  gcount_cmd->add_option("n", gn, "")->required()->check(CLI::Range(0, 63));
  auto* gstats_cmd = graphs_cmd->add_subcommand("stats", "per-orbit graph dumps and statistics");
  gstats_cmd->add_option("m", gm, "")->required()->check(CLI::Range(0, 28));
  gstats_cmd->add_option("n", gn, "")->required()->check(CLI::Range(0, 63));
  graphs_cmd->require_subcommand(1);

  auto* cone_cmd = app.add_subcommand("cone", "nef-cone face census");
  auto* faces_cmd = cone_cmd->add_subcommand("faces", "face counts by dimension, as JSON");
  cone_cmd->require_subcommand(1);

  auto* check_cmd = app.add_subcommand("paper-check", "run the full regression scoreboard");

  // Global flags may follow the subcommand: let unmatched options flow up.
  for (CLI::App* sub : {lattice_cmd, verify_cmd, census_cmd, build_cmd, count_cmd, table_cmd,
                        orbits_cmd, graphs_cmd, gcount_cmd, gstats_cmd, cone_cmd, faces_cmd,
                        check_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) return cmd_lattice_verify(cfg, corrupt);
    if (build_cmd->parsed()) return cmd_census_build(cfg);
    if (count_cmd->parsed()) return cmd_count(cfg, m, n);
    if (table_cmd->parsed()) return cmd_table(cfg, m_max, n_max);
    if (orbits_cmd->parsed()) return cmd_orbits(cfg, om, on);
    if (gcount_cmd->parsed()) return cmd_graphs(cfg, gm, gn, false);
    if (gstats_cmd->parsed()) return cmd_graphs(cfg, gm, gn, true);
    if (faces_cmd->parsed()) return cmd_cone_faces(cfg);
    if (check_cmd->parsed()) return cmd_paper_check(cfg);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << std::endl;
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}
