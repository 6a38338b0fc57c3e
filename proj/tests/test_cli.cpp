#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

// Exercises the installed command-line surface end to end: subcommands,
// output, and the documented exit codes (0 ok, 1 check failure, 2 usage,
// 3 resource limit).

namespace {

struct RunResult {
  int code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string out_path = std::string(QUARTIC_TEST_TMPDIR) + "/cli_out.txt";
  const std::string cmd =
      std::string(QUARTIC_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("lattice verify passes and the corrupted basis fails") {
  CHECK(run("lattice verify").code == 0);
  CHECK(run("lattice verify --inject-corrupt-basis").code == 1);
}

TEST_CASE("count emits exact integers with and without a census cache") {
  const std::string census = std::string(QUARTIC_TEST_TMPDIR) + "/census.jsonl";
  std::remove(census.c_str());

  auto first = run("count 0 10 --census " + census);
  CHECK(first.code == 0);
  CHECK(first.output == "490750\n");

  auto cached = run("count 0 0 --census " + census);
  CHECK(cached.code == 0);
  CHECK(cached.output == "1\n");

  auto json = run("count 2 2 --format json --census " + census);
  CHECK(json.code == 0);
  CHECK(json.output == "{\"N\":23,\"d\":762048,\"m\":2,\"n\":2}\n");
}

TEST_CASE("table emits the published n = 0 row") {
  const std::string census = std::string(QUARTIC_TEST_TMPDIR) + "/census.jsonl";
  auto res = run("table 14 0 --format csv --census " + census);
  CHECK(res.code == 0);
  std::istringstream lines(res.output);
  std::string line;
  std::getline(lines, line);  // header
  const char* want[] = {"0,1",  "1,1",  "2,1",  "3,2",   "4,3",   "5,5",   "6,10", "7,16",
                        "8,23", "9,37", "10,54", "11,70", "12,90", "13,101", "14,103"};
  for (const char* w : want) {
    REQUIRE(std::getline(lines, line));
    CHECK(line == w);
  }
}

TEST_CASE("orbits: deterministic JSON and the documented failure codes") {
  auto a = run("orbits 4 0 --format json --threads 1");
  auto b = run("orbits 4 0 --format json --threads 3");
  CHECK(a.code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("[315,5040,15120]") != std::string::npos);

  auto t6 = run("orbits 0 3 --format json");
  CHECK(t6.code == 0);
  CHECK(t6.output.find("[63,315,336,1890,2016,3780,5040,15120,15120]") != std::string::npos);

  CHECK(run("orbits 0 10").code == 3);   // resource limit
  CHECK(run("count 29 0").code == 2);    // usage
  CHECK(run("frobnicate").code == 2);    // unknown subcommand
}

TEST_CASE("graphs count matches the published G value") {
  auto res = run("graphs count 6 0 --threads 2");
  CHECK(res.code == 0);
  CHECK(res.output == "9\n");
}

TEST_CASE("cone faces emits the face census as JSON") {
  auto res = run("cone faces");
  CHECK(res.code == 0);
  CHECK(res.output.find("\"7\":56") != std::string::npos);
  CHECK(res.output.find("\"7A1\":576") != std::string::npos);
  CHECK(res.output.find("\"6A1tilde\":126") != std::string::npos);
}

TEST_CASE("--out writes the result to a file") {
  const std::string path = std::string(QUARTIC_TEST_TMPDIR) + "/faces.json";
  std::remove(path.c_str());
  CHECK(run("cone faces --out " + path).code == 0);
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("\"7A1\":576") != std::string::npos);
}

TEST_SUITE_END();
