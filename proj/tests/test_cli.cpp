#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef GAU_CLI_PATH
#error "GAU_CLI_PATH must point at the gau binary"
#endif

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string("\"") + GAU_CLI_PATH + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze in json") {
  RunResult r = run("analyze --p 7 --format json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["field"]["p"] == 7);
  CHECK(j["field"]["q"] == 7);
  CHECK(j["group"]["spec"] == "C3xD10");
  CHECK(j["radical_dim"] == 0);
  REQUIRE(j["components"].size() == 2);
  CHECK(j["components"][0]["n"] == 1);
  CHECK(j["components"][0]["count"] == 6);
  CHECK(j["components"][1]["n"] == 2);
  CHECK(j["components"][1]["d"] == 2);
  CHECK(j["components"][1]["count"] == 3);
  CHECK(j.contains("version"));
  CHECK(j.contains("timing_ms"));
  CHECK(j["ferraz"]["m"] == 30);
}

TEST_CASE("analyze extension fields") {
  RunResult r = run("analyze --p 2 --k 2 --format json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["field"]["q"] == 4);
  CHECK(j["field"]["modulus"] == "t^2 + t + 1");
  CHECK(j["radical_dim"] == 3);
  CHECK(j["unit_group_order"].is_string());
}

TEST_CASE("analyze in text") {
  RunResult r = run("analyze --p 2");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("GF(2)") != std::string::npos);
  CHECK(r.out.find("139968000") != std::string::npos);
}

TEST_CASE("characteristic three falls outside the table") {
  RunResult r = run("analyze --p 3 --format json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["case_label"] == "outside reference table");
  CHECK(j["structure"] == "");
}

TEST_CASE("other groups are accepted") {
  RunResult r = run("analyze --group C6 --p 7 --format json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["group"]["order"] == 6);
  CHECK(j["unit_group_order"] == "46656");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("analyze --group D7 --p 2").code == 2);
  CHECK(run("analyze --p 4").code == 2);
  CHECK(run("analyze --p 2 --k 0").code == 2);
  CHECK(run("analyze").code == 2);  // --p is required
  CHECK(run("verify --suite bogus").code == 2);
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").code == 0);
  CHECK(run("analyze --help").code == 0);
}

TEST_CASE("verify suites") {
  RunResult a = run("verify --suite theorem --seed 0 --format json");
  REQUIRE(a.code == 0);
  RunResult b = run("verify --suite theorem --seed 0 --format json");
  CHECK(a.out == b.out);  // byte-identical across runs
  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["suite"] == "theorem");
  CHECK(j["passed"] == true);
  CHECK(j["cases"].size() == 15);

  RunResult t = run("verify --suite oracle");
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS") != std::string::npos);
}
