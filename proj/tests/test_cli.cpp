#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(QSCHUR_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("multiply") {
  auto r = run("multiply --window 1:2 --r 1 --a E12 --b E21");
  CHECK(r.code == 0);
  CHECK(r.out == "[E11]\n");
  CHECK(run("multiply --window 1:2 --r 1 --a E11 --b E22").out == "0\n");
  auto bad = run("multiply --window 1:2 --r 1 --a E1x --b E21");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("malformed") != std::string::npos);
  CHECK(run("multiply --window 1:2 --r 2 --a E12 --b E21").code == 2);
  CHECK(run("multiply --window 1:2 --r 1 --a E13 --b E31").code == 2);
  CHECK(run("multiply --window 2 --r 1 --a E12 --b E21").code == 2);
  auto j = nlohmann::json::parse(run("multiply --window 1:2 --r 1 --a E12 --b E21 --format json").out);
  CHECK(j["r"] == 1);
  CHECK(j["terms"].size() == 1);
}

TEST_CASE("fpoly") {
  auto r = run("fpoly --a E12 --b E21 --format json");
  CHECK(r.code == 0);
  auto rows = nlohmann::json::parse(r.out);
  CHECK(rows.size() == 2);
  for (const auto& row : rows) CHECK(row["at_one"] == "1");
  auto diag = nlohmann::json::parse(run("fpoly --a E11 --b E11 --format json").out);
  CHECK(diag.size() == 1);
  CHECK(diag[0]["f"] == "1");
  CHECK(nlohmann::json::parse(run("fpoly --a E11 --b E22 --format json").out).empty());
  CHECK(run("fpoly --a E12 --b E21").out.rfind("C\tf(v,v')\tv'=1\n", 0) == 0);
}

TEST_CASE("verify") {
  auto all = run("verify --scope all --window -1:1 --r 2");
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  auto oracle = run("verify --scope oracle --window 1:2 --r 3");
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("PASS oracle.constants window=1:2 r=3 q=3") != std::string::npos);
  auto neg = run("verify --scope presentation --window -1:1 --r 2 --perturb");
  CHECK(neg.code == 1);
  CHECK(neg.out.find("FAIL rel.g") != std::string::npos);
  CHECK(neg.out.find("witness:") != std::string::npos);
  CHECK(run("verify --scope nothing --window -1:1 --r 2").code == 2);
  CHECK(run("verify --scope oracle --window 1:2 --r 2 --q 7").code == 2);
  auto j = nlohmann::json::parse(run("verify --scope bases --window -1:1 --r 1 --format json").out);
  CHECK(j["ok"] == true);
}

TEST_CASE("weights") {
  CHECK(run("weights --mu 2 --window 1:2").out.find("total 3") != std::string::npos);
  CHECK(run("weights --mu 1,1 --window 1:2").out.find("total 1") != std::string::npos);
  CHECK(run("weights --mu 1,1 --window 1:1").out.find("total 0") != std::string::npos);
  CHECK(run("weights --mu 1,2 --window 1:2").code == 2);
}

TEST_CASE("output is deterministic and nothing is printed on error") {
  CHECK(run("verify --scope all --window -1:1 --r 1").out == run("verify --scope all --window -1:1 --r 1").out);
  CHECK(run("fpoly --a E12+E23 --b E21").out == run("fpoly --a E12+E23 --b E21").out);
  auto bad = run("multiply --window 1:2 --r 1 --a E12 --b Q");
  CHECK(bad.out.rfind("error:", 0) == 0);
  CHECK(run("").code == 2);
}
