// End-to-end checks of the installed binary: exit codes, PASS lines, machine
// output determinism. Spawns the tool built by this tree.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SINGCURVE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("glue succeeds on a valid spec") {
  auto r = run_cli("glue --spec " + data("glue_p1_f2_deg2.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("maximal            yes") != std::string::npos);
  CHECK(r.out.find("delta-optimal      yes") != std::string::npos);
}

TEST_CASE("glue machine output is deterministic and parseable") {
  std::string args = "glue --format machine --spec " + data("glue_elliptic_n213.json");
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["result"]["arithmetic_genus"] == 3);
  CHECK(doc["result"]["point_counts"][0] == "6");
  CHECK(doc["result"]["bound_b"] == "7");
  CHECK(doc["result"]["is_delta_optimal"] == "no");
  CHECK(doc["tool"] == "singcurve");
}

TEST_CASE("exit codes distinguish the failure classes") {
  CHECK(run_cli("glue --spec " + data("glue_bad_syntax.json")).code == 2);     // parse
  CHECK(run_cli("glue --spec " + data("glue_unknown_field.json")).code == 3);  // schema
  CHECK(run_cli("glue --spec " + data("glue_delta0.json")).code == 3);         // no-op gluing
  CHECK(run_cli("glue --spec " + data("glue_budget.json")).code == 3);         // budget
  CHECK(run_cli("glue --spec " + data("glue_maximal_f4.json")).code == 3);     // B_2 = 0
  CHECK(run_cli("verify-b --q 256 --n 1").code == 4);                          // work bound
  CHECK(run_cli("zeta --q 2 --coeffs 1,3,2").code == 3);                       // bad numerator
  CHECK(run_cli("bounds --q 6 --g 0 --pi 0").code == 3);                       // not a prime power
}

TEST_CASE("verify-b and scan-elliptic report PASS") {
  auto r = run_cli("verify-b --q 2 --n 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  auto r2 = run_cli("verify-b --q 3 --n 2 --format machine");
  CHECK(r2.code == 0);
  CHECK(nlohmann::json::parse(r2.out)["result"]["pass"] == true);
  auto r3 = run_cli("scan-elliptic --q 3");
  CHECK(r3.code == 0);
  CHECK(r3.out.find("PASS") != std::string::npos);
}

TEST_CASE("bounds, census and zeta text output") {
  auto r = run_cli("bounds --q 2 --g 1 --pi 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("bound (B)  N_q(g)+pi-g  7") != std::string::npos);
  CHECK(r.out.find("delta-optimal pi range  [1, 1]") != std::string::npos);

  auto r2 = run_cli("census --q 2 --d-max 3");
  CHECK(r2.code == 0);

  auto r3 = run_cli("census --q 2 --d-max 2 --base elliptic --n1 4 --format machine");
  CHECK(r3.code == 0);
  auto doc = nlohmann::json::parse(r3.out);
  CHECK(doc["result"]["rows"][1]["b_d"] == "2");
  CHECK(std::string(doc["result"]["note"]).find("agrees") != std::string::npos);

  auto r4 = run_cli("zeta --q 2 --coeffs 1,1,2 --horizon 3 --format machine");
  CHECK(r4.code == 0);
  auto zdoc = nlohmann::json::parse(r4.out);
  CHECK(zdoc["result"]["point_counts"] == nlohmann::json::array({"4", "8", "4"}));
  CHECK(zdoc["result"]["census"] == nlohmann::json::array({"4", "2", "0"}));

  auto r5 = run_cli("census --q 2 --d-max 3 --base numerator --coeffs 1,1,2 --format machine");
  CHECK(r5.code == 0);
  auto cdoc = nlohmann::json::parse(r5.out);
  CHECK(cdoc["result"]["rows"][0]["b_d"] == "4");
  CHECK(cdoc["result"]["rows"][1]["b_d"] == "2");
  CHECK(cdoc["result"]["rows"][2]["b_d"] == "0");
}

TEST_CASE("glue --horizon overrides the document") {
  auto r = run_cli("glue --format machine --horizon 3 --spec " + data("glue_p1_f2_deg2.json"));
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"]["horizon"] == 3);
  CHECK(doc["result"]["point_counts"].size() == 3);
  CHECK(doc["input"]["horizon"] == 3);
}
