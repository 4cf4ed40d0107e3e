#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run hspsim(const std::string& args) {
  const std::string cmd = std::string("SOURCE_DATE_EPOCH=0 '") + HSPSIM_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(hspsim("--help").code == 0);
  CHECK(hspsim("").code == 64);
  CHECK(hspsim("frobnicate").code == 64);
  CHECK(hspsim("chartable --group nonsense:3").code == 64);
  CHECK(hspsim("simulate --group s4 --h \"(1 2 3)\"").code == 64);
  CHECK(hspsim("bound --family wreath").code == 64);
  CHECK(hspsim("simulate --group psl2:13 --k 4").code == 69);
  CHECK(hspsim("bound --family power --group s3 --n 5").code == 2);
  CHECK(hspsim("verify --suite tables --group psl2:7").code == 0);
}

TEST_CASE("bound report carries the header and exact delta1") {
  const Run r = hspsim("bound --family psl2 --q 13");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["header"]["timestamp"] == "1970-01-01T00:00:00Z");
  CHECK(j["header"]["tool_version"] == "1.0.0");
  CHECK(j["header"]["group_spec"] == "psl2:13");
  CHECK(j["delta1_exact"] == "137/546");
  CHECK(j["s_epsilon_labels"] == json::array({"1"}));
  CHECK(j["group_order"] == 1092);
}

TEST_CASE("huge group orders are emitted as strings") {
  const Run r = hspsim("bound --family wreath --n 30");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["group_order"].is_string());
}

TEST_CASE("simulate output is stable across thread counts") {
  const Run a = hspsim("simulate --group wreath:3 --k 1 --seed 7 --threads 1");
  const Run b = hspsim("simulate --group wreath:3 --k 1 --seed 7 --threads 3");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["runs"].size() == 1);
  CHECK(j["runs"][0]["avg_l1"].get<double>() <= j["delta2"].get<double>());
}

TEST_CASE("chartable formats") {
  const Run csv = hspsim("chartable --group s3");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("[2,1]") != std::string::npos);
  const Run js = hspsim("chartable --group dihedral:4 --format json");
  REQUIRE(js.code == 0);
  CHECK(json::parse(js.out).contains("header"));
  CHECK(hspsim("chartable --group s3 --format text").code == 64);
}

TEST_CASE("verify reports per-check statuses") {
  const Run r = hspsim("verify --suite trace --group dihedral:4");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["checks"].size() == 3);
  const Run c = hspsim("verify --suite lemmas --group cyclic:5");
  CHECK(json::parse(c.out)["checks"][0]["status"] == "HYPOTHESIS-NOT-MET");
}
