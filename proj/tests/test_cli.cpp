#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = POLYOPT_CLI_PATH;
const std::string kData = POLYOPT_DATA_DIR;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  const int rc = pclose(pipe);
  res.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

std::string temp_path(const std::string& stem) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + stem;
}

}  // namespace

TEST_CASE("solve exit codes follow the outcome", "[cli]") {
  const std::string sol = temp_path("polyopt_cli_sol.json");
  CHECK(run_cli("solve " + kData + "/ex1.json -o " + sol).code == 0);
  CHECK(run_cli("solve " + kData + "/ex5.json").code == 2);

  const std::string inf = temp_path("polyopt_cli_infeasible.json");
  std::ofstream(inf) << R"({"n":1,"q":1,
    "graph":{"h":{"A":[["0"]],"B":[["0"]],"b":["1"]}},
    "cone":{"generators":[["1"]]}})";
  CHECK(run_cli("solve " + inf).code == 3);
}

TEST_CASE("solve reports the witness on the conic example", "[cli]") {
  const auto res = run_cli("solve --json " + kData + "/ex5.json");
  CHECK(res.code == 2);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j["status"] == "no_solution");
  CHECK(j["witness"][0] == "1");
}

TEST_CASE("check reports the predicate suite", "[cli]") {
  const auto r5 = run_cli("check --json " + kData + "/ex5.json");
  REQUIRE(r5.code == 0);
  const auto j5 = nlohmann::json::parse(r5.out);
  CHECK(j5["feasible"] == true);
  CHECK(j5["bounded"] == false);
  for (const char* key : {"i", "ii", "iii", "iv", "v", "vi"})
    CHECK(j5["prop4"][key] == false);
  CHECK(j5["condition3"] == true);

  const auto r1 = run_cli("check --json " + kData + "/ex1.json");
  REQUIRE(r1.code == 0);
  const auto j1 = nlohmann::json::parse(r1.out);
  CHECK(j1["feasible"] == true);
  CHECK(j1["bounded"] == false);
  for (const char* key : {"i", "ii", "iii", "iv", "v", "vi"})
    CHECK(j1["prop4"][key] == true);

  const std::string inf = temp_path("polyopt_cli_infeasible2.json");
  std::ofstream(inf) << R"({"n":1,"q":1,
    "graph":{"h":{"A":[["0"]],"B":[["0"]],"b":["1"]}},
    "cone":{"generators":[["1"]]}})";
  const auto ri = run_cli("check --json " + inf);
  REQUIRE(ri.code == 0);
  const auto ji = nlohmann::json::parse(ri.out);
  CHECK(ji["feasible"] == false);
  CHECK(ji["prop4"].is_null());
}

TEST_CASE("verify accepts the solver output and rejects broken pairs", "[cli]") {
  const std::string sol = temp_path("polyopt_cli_verify.json");
  REQUIRE(run_cli("solve " + kData + "/ex1.json -o " + sol).code == 0);
  CHECK(run_cli("verify " + kData + "/ex1.json " + sol).code == 0);

  const std::string bad = temp_path("polyopt_cli_bad_pair.json");
  std::ofstream(bad) << R"({"status":"solution","S_bar":[["0"]],"S_hat":[]})";
  const auto res = run_cli("verify " + kData + "/ex1.json " + bad);
  CHECK(res.code == 2);
  CHECK(res.out.find("infimum") != std::string::npos);

  // any nonempty pair fails on the conic example
  const std::string pair5 = temp_path("polyopt_cli_pair5.json");
  std::ofstream(pair5) << R"({"status":"solution","S_bar":[["0"]],"S_hat":[["1"]]})";
  CHECK(run_cli("verify " + kData + "/ex5.json " + pair5).code == 2);

  // dimension mismatch between the files is an input error
  const std::string wrong = temp_path("polyopt_cli_wrong_dim.json");
  std::ofstream(wrong) << R"({"status":"solution","S_bar":[["0","0"]],"S_hat":[]})";
  CHECK(run_cli("verify " + kData + "/ex1.json " + wrong).code == 1);
}

TEST_CASE("upper-image prints both representations", "[cli]") {
  const auto res = run_cli("upper-image " + kData + "/ex5.json");
  REQUIRE(res.code == 0);
  CHECK(res.out.find("y1 + 2 y2 >= 0") != std::string::npos);
  CHECK(res.out.find("y1 >= 0") != std::string::npos);
  const auto j = nlohmann::json::parse(run_cli("upper-image --json " + kData + "/ex5.json").out);
  CHECK(j["v"]["points"].size() == 1);
  CHECK(j["v"]["rays"].size() == 2);
}

TEST_CASE("eval prints the value set", "[cli]") {
  const auto res = run_cli("eval " + kData + "/ex1.json 1");
  REQUIRE(res.code == 0);
  CHECK(res.out.find("y1 >= -1") != std::string::npos);
  CHECK(res.out.find("y2 >= 1") != std::string::npos);
  const auto empty = run_cli("eval --json " + kData + "/ex1.json -- -1");
  CHECK(nlohmann::json::parse(empty.out)["empty"] == true);
}

TEST_CASE("minimal decides points and directions", "[cli]") {
  // the conic example is its own homogeneous problem; 0 is not a minimizer
  const auto res = run_cli("minimal --json " + kData + "/ex5.json --point 0");
  REQUIRE(res.code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j["minimal"] == false);
  CHECK(j.contains("dominator"));

  const auto dir = run_cli("minimal --json " + kData + "/ex1.json --direction 1");
  CHECK(nlohmann::json::parse(dir.out)["minimal"] == true);

  // the zero direction is rejected
  CHECK(run_cli("minimal " + kData + "/ex1.json --direction 0").code == 1);
}

TEST_CASE("project prints the reduced graph", "[cli]") {
  const auto res = run_cli("project " + kData + "/ex1.json");
  REQUIRE(res.code == 0);
  CHECK(res.out.find("x1") != std::string::npos);
}

TEST_CASE("malformed input exits with code 1", "[cli]") {
  const std::string trunc = temp_path("polyopt_cli_trunc.json");
  std::ofstream(trunc) << R"({"n": 1, "q": 2, "graph")";
  CHECK(run_cli("solve " + trunc).code == 1);
  CHECK(run_cli("check does_not_exist.json").code == 1);
  const std::string nokey = temp_path("polyopt_cli_nokey.json");
  std::ofstream(nokey) << R"({"n":1,"q":2,"cone":{"generators":[]}})";
  CHECK(run_cli("solve " + nokey).code == 1);
}

TEST_CASE("quiet suppresses output", "[cli]") {
  const auto res = run_cli("check --quiet " + kData + "/ex1.json");
  CHECK(res.code == 0);
  CHECK(res.out.empty());
}
