#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BUBBLEPAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string make_temp_dir() {
  char tmpl[] = "/tmp/bubblepat-cli-XXXXXX";
  REQUIRE(mkdtemp(tmpl) != nullptr);
  return tmpl;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("apply prints the image") {
  const CliResult r = run_cli("apply 213");
  CHECK(r.code == 0);
  CHECK(r.output == "123\n");
  CHECK(run_cli("apply '2 1 3'").output == "123\n");
}

TEST_CASE("apply trace shows every pass") {
  const CliResult r = run_cli("apply 2431 --chain SB --trace");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "input: 2 4 3 1\n"
        "after B: 2 3 1 4\n"
        "after S: 2 1 3 4\n"
        "2134\n");
}

TEST_CASE("apply json report") {
  const CliResult r = run_cli("apply 213 --json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["command"] == "apply");
  CHECK(j["result"]["image"] == "1 2 3");
  CHECK(j["result"]["chain"] == "B");
  CHECK(j["version"] == "0.1.0");
}

TEST_CASE("parse failures exit with 2") {
  CHECK(run_cli("apply 122").code == 2);
  CHECK(run_cli("apply 231 --chain Q").code == 2);
  CHECK(run_cli("classify ''").code == 2);
  CHECK(run_cli("verify bogus").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("apply").code == 2);
}

TEST_CASE("classify output") {
  const CliResult good = run_cli("classify 231");
  CHECK(good.code == 0);
  CHECK(good.output.find("231: TwoLrGeneral (good)") != std::string::npos);
  CHECK(good.output.find("lr maxima at positions 1 2") != std::string::npos);

  const CliResult bad = run_cli("classify 2341");
  CHECK(bad.code == 0);
  CHECK(bad.output.find("NotAClass (not a class)") != std::string::npos);
}

TEST_CASE("basis for one pattern") {
  const CliResult r = run_cli("basis 231");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "basis (4): 2341, 2431, 3241, 4231\n"
        "case: TwoLrGeneral\n"
        "cross-checked against the exhaustive scan\n");
}

TEST_CASE("basis json carries the witness for a bad pattern") {
  const CliResult r = run_cli("basis 1234 --json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["result"]["outcome"] == "NotAClass");
  CHECK(j["result"]["basis"].empty());
  CHECK(j["result"]["witness"]["theta1"] == "2 1 4 3");
  CHECK(j["result"]["witness"]["theta2"] == "5 2 1 4 3");
}

TEST_CASE("basis for a set rejects bad members with exit 4") {
  const CliResult r = run_cli("basis 21,2341");
  CHECK(r.code == 4);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK(r.output.find("2341") != std::string::npos);
}

TEST_CASE("basis for a set of good patterns") {
  const CliResult r = run_cli("basis 231,321");
  CHECK(r.code == 0);
  CHECK(r.output.find("basis (6):") != std::string::npos);
}

TEST_CASE("enumerate prints csv") {
  const CliResult r = run_cli("enumerate 231,321 -n 4");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "n,count,root\n"
        "1,1,1.000000\n"
        "2,2,1.414214\n"
        "3,4,1.587401\n"
        "4,8,1.681793\n");
}

TEST_CASE("enumerate verify mode cross-validates") {
  const CliResult r = run_cli("enumerate 231,321 -n 6 --verify --json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["result"]["verified"] == true);
  CHECK(j["result"]["from_cache"] == false);
  CHECK(j["result"]["growth_estimate"].is_number());
}

TEST_CASE("horizon above the cap exits with 5, --cap raises it") {
  CHECK(run_cli("enumerate 21 -n 12").code == 5);
  const CliResult raised = run_cli("enumerate 21 -n 12 --cap 12");
  CHECK(raised.code == 0);
  CHECK(raised.output.find("12,1,1.000000") != std::string::npos);
}

TEST_CASE("enumerate caches csv per basis and horizon") {
  const std::string dir = make_temp_dir();
  const std::string args = "enumerate 231,321 -n 4 --cache " + dir;

  const CliResult first = run_cli(args + " --json");
  CHECK(first.code == 0);
  CHECK(nlohmann::json::parse(first.output)["result"]["from_cache"] == false);

  const std::filesystem::path file =
      std::filesystem::path(dir) / "2.3.1_3.2.1-n4.csv";
  REQUIRE(std::filesystem::exists(file));
  const std::string cached = slurp(file);
  CHECK(cached == run_cli("enumerate 231,321 -n 4").output);

  const CliResult second = run_cli(args + " --json");
  const nlohmann::json j = nlohmann::json::parse(second.output);
  CHECK(j["result"]["from_cache"] == true);
  CHECK(j["result"]["csv"] == cached);

  // --verify bypasses the cache and recomputes
  const CliResult forced = run_cli(args + " --verify --json");
  CHECK(nlohmann::json::parse(forced.output)["result"]["from_cache"] == false);

  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory can come from the environment") {
  const std::string dir = make_temp_dir();
  const CliResult r = run_cli("enumerate 21 -n 3");
  CHECK(r.code == 0);
  const std::string cmd = "BUBBLEPAT_CACHE=" + dir + " " + BUBBLEPAT_CLI_PATH +
                          " enumerate 21 -n 3 > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "2.1-n3.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify suite runs and is worker independent") {
  const CliResult one = run_cli("verify operators -n 5 --workers 1");
  CHECK(one.code == 0);
  CHECK(one.output.find("result: PASS") != std::string::npos);
  const CliResult eight = run_cli("verify operators -n 5 --workers 8");
  CHECK(one.output == eight.output);
}

TEST_CASE("diagram draws the grid") {
  const CliResult r = run_cli("diagram 2431 --highlight 1,3");
  CHECK(r.code == 0);
  CHECK(r.output ==
        ". * . .\n"
        ". . # .\n"
        "# . . .\n"
        ". . . *\n");
  CHECK(run_cli("diagram 231 --highlight 5").code == 2);
  CHECK(run_cli("diagram 231 --highlight x").code == 2);
}

TEST_CASE("version and help") {
  const CliResult v = run_cli("--version");
  CHECK(v.code == 0);
  CHECK(v.output == "0.1.0\n");
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("apply --help").code == 0);
}

TEST_CASE("--out writes the report file") {
  const std::string dir = make_temp_dir();
  const std::string path = dir + "/report.json";
  const CliResult r = run_cli("classify 231 --out " + path);
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(path));
  CHECK(j["command"] == "classify");
  CHECK(j["result"]["case"] == "TwoLrGeneral");

  // artifact-producing commands write the artifact, not the report
  const std::string csv_path = dir + "/counts.csv";
  CHECK(run_cli("enumerate 21 -n 3 --out " + csv_path).code == 0);
  CHECK(slurp(csv_path) ==
        "n,count,root\n"
        "1,1,1.000000\n"
        "2,1,1.000000\n"
        "3,1,1.000000\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("json report matches the golden file") {
  const CliResult r = run_cli("classify 231 --json");
  CHECK(r.code == 0);
  nlohmann::json actual = nlohmann::json::parse(r.output);
  nlohmann::json golden = nlohmann::json::parse(
      slurp(std::filesystem::path(BUBBLEPAT_GOLDEN_DIR) / "classify_231.json"));
  actual["elapsed_ms"] = 0;
  golden["elapsed_ms"] = 0;
  CHECK(actual == golden);
}
