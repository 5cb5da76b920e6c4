#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plovkit/cli.hpp"

using namespace plovkit;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"plovkit"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("plovkit_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("rank and count in text form") {
  const auto r = run({"rank", "--k", "4", "--d", "3", "--n", "6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "4\n");
  const auto c = run({"partition", "count", "--k", "4", "--d", "3", "--n", "6"});
  CHECK(c.code == kExitOk);
  CHECK(c.out == "5\n");
}

TEST_CASE("plov of a Jordan model") {
  const auto r = run({"plov", "--jordan", "0,2,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "plov=4 gkdim=5 k=2\n");
  // global options are accepted after the subcommand too
  const auto j = run({"plov", "--jordan", "0,3,1", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["records"][0]["values"]["plov"] == "9");
  CHECK(doc["records"][0]["values"]["leading_coefficient"] == "1/1440");
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"--bogus", "rank"}).code == kExitInvalidInput);
  CHECK(run({"rank", "--k", "4", "--d", "3"}).code == kExitInvalidInput);
  CHECK(run({"partition", "count", "--k", "41", "--d", "1", "--n", "1"}).code == kExitInvalidInput);
  CHECK(run({"--max-dk", "50", "partition", "count", "--k", "41", "--d", "1", "--n", "1"}).code == kExitOk);
  CHECK(run({"plov", "--jordan", "2,2,1"}).code == kExitInvalidInput);
  CHECK(run({"plov", "--jordan", "1,2"}).code == kExitInvalidInput);
  CHECK(run({"plov"}).code == kExitInvalidInput);
  CHECK(run({"plov", "--matrix", "/nonexistent/plovkit.json"}).code == kExitInvalidInput);
  CHECK(run({"--format", "xml", "rank", "--k", "1", "--d", "1", "--n", "1"}).code == kExitInvalidInput);
  const auto bad_det = scratch("det.json", R"({"d": 2, "A": [[2, 0], [0, 1]]})");
  CHECK(run({"plov", "--matrix", bad_det.c_str()}).code == kExitInvalidInput);
  const auto bad_d = scratch("d.json", R"({"d": 3, "A": [[1, 1], [0, 1]]})");
  CHECK(run({"plov", "--matrix", bad_d.c_str()}).code == kExitInvalidInput);
  const auto bad_h = scratch("h.json", R"({"d": 2, "A": [[1, 1], [0, 1]], "H": [[1, 0], [0, -1]]})");
  CHECK(run({"plov", "--matrix", bad_h.c_str()}).code == kExitInvalidInput);
  CHECK(run({"--max-dim", "4", "plov", "--jordan", "1,4,1"}).code == kExitInvalidInput);
}

TEST_CASE("positive entropy exits with 3") {
  const auto cat = scratch("cat.json", R"({"d": 2, "A": [[2, 1], [1, 1]]})");
  const auto r = run({"plov", "--matrix", cat.c_str()});
  CHECK(r.code == kExitPositiveEntropy);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("matrix input with an explicit polarization") {
  const auto f = scratch("j12.json", R"({"d": 2, "A": [["1", "1"], ["0", "1"]], "H": [[2, 1], [1, 2]]})");
  const auto r = run({"plov", "--matrix", f.c_str()});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "plov=4 gkdim=5 k=2\n");
  const auto rot = scratch("rot.json", R"({"d": 2, "A": [[0, -1], [1, 0]]})");
  const auto v = run({"--format", "json", "verify", "--matrix", rot.c_str()});
  CHECK(v.code == kExitOk);
  CHECK(nlohmann::json::parse(v.out)["ok"] == true);
}

TEST_CASE("JSON output is deterministic and round-trips") {
  const auto a = run({"--format", "json", "verify", "--jordan", "0,3,1", "--seed", "5"});
  const auto b = run({"--format", "json", "verify", "--jordan", "0,3,1", "--seed", "5"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::ordered_json::parse(a.out);
  CHECK(doc.dump(2) + "\n" == a.out);
  CHECK(doc["tool"] == "plovkit");
  CHECK(doc["config"]["seed"] == "5");
  CHECK_FALSE(doc.contains("seconds"));
  const auto timed = run({"--format", "json", "--timing", "plov", "--jordan", "0,2,1"});
  CHECK(nlohmann::json::parse(timed.out).contains("seconds"));
}

TEST_CASE("CSV output") {
  const auto r = run({"--format", "csv", "degrees", "--jordan", "0,2,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("name,anchor,status,values\n", 0) == 0);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "plovkit_test_out.json";
  std::filesystem::remove(path);
  const auto r = run({"--format", "json", "--out", path.c_str(), "lefschetz", "verify", "--k", "3", "--d", "2", "--hard"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["ok"] == true);
}

TEST_CASE("partition list and matrix") {
  const auto l = run({"partition", "list", "--k", "4", "--d", "3", "--n", "6"});
  CHECK(l.code == kExitOk);
  CHECK(l.out == "4,2,0\n4,1,1\n3,3,0\n3,2,1\n2,2,2\n");
  const auto m = run({"--format", "json", "matrix", "--k", "2", "--d", "2", "--n", "3"});
  CHECK(m.code == kExitOk);
  const auto doc = nlohmann::json::parse(m.out);
  CHECK(doc["records"][0]["values"]["entries"] == nlohmann::json::parse(R"([["1"],["2"]])"));
}

TEST_CASE("verify-all on a subset") {
  const auto r = run({"verify-all", "--criterion", "1", "--criterion", "5"});
  CHECK(r.code == kExitOk);
  const auto j = run({"--format", "json", "verify-all", "--criterion", "3"});
  CHECK(nlohmann::json::parse(j.out)["records"].size() == 1u);
  CHECK(run({"verify-all", "--criterion", "13"}).code == kExitInvalidInput);
}
