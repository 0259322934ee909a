#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kgamma/report.hpp"

using namespace kgamma;
using nlohmann::ordered_json;

namespace {

#ifndef KGAMMA_CLI_PATH
#define KGAMMA_CLI_PATH "./kgamma"
#endif

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string tmp = "cli_out.tmp";
  const std::string cmd =
      std::string(KGAMMA_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream f(tmp);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  std::remove(tmp.c_str());
  return r;
}

}  // namespace

TEST_CASE("report exit-code mapping") {
  Report r = make_report({{"command", "unit"}});
  finalize_report(r);
  CHECK(r.exit_code == kExitPass);
  r.summary.indeterminate = 1;
  finalize_report(r);
  CHECK(r.exit_code == kExitIndeterminate);
  r.summary.fail = 1;
  finalize_report(r);
  CHECK(r.exit_code == kExitFail);  // fail dominates indeterminate
}

TEST_CASE("json schema and eval value") {
  auto r = run_cli("eval gammak --x 6 --k 2");
  CHECK(r.exit_code == 0);
  auto j = ordered_json::parse(r.out);
  for (const char* key :
       {"version", "timestamp", "config", "results", "summary", "exit_code"})
    CHECK(j.contains(key));
  REQUIRE(j["results"].size() == 1);
  const auto& e = j["results"][0];
  CHECK(e["type"] == "eval");
  CHECK(e["value"] == "8");
  CHECK(e["backend"] == "reduction");
  CHECK(j["exit_code"] == 0);
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("eval backends agree through the cli") {
  for (const char* b : {"reduction", "series", "quadrature"}) {
    auto r = run_cli(std::string("eval digammak --x 2.5 --k 0.5 --backend ") +
                     b);
    REQUIRE(r.exit_code == 0);
    auto j = ordered_json::parse(r.out);
    const double v =
        std::stod(j["results"][0]["value"].get<std::string>());
    // 2 (25/12 - gamma - ln 2)
    CHECK(v == doctest::Approx(1.6259409757437103).epsilon(1e-12));
  }
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  auto a = run_cli("certify thm1b --k 2 --m 3 --rmax 2");
  auto b = run_cli("certify thm1b --k 2 --m 3 --rmax 2");
  REQUIRE(a.exit_code == 0);
  auto ja = ordered_json::parse(a.out);
  auto jb = ordered_json::parse(b.out);
  ja["timestamp"] = "";
  jb["timestamp"] = "";
  CHECK(ja == jb);
}

TEST_CASE("serial and parallel runs emit identical results") {
  auto a = run_cli("certify cor1-upper --k 1 --m 2 --threads 1");
  auto b = run_cli("certify cor1-upper --k 1 --m 2 --threads 4");
  auto ja = ordered_json::parse(a.out);
  auto jb = ordered_json::parse(b.out);
  CHECK(ja["results"] == jb["results"]);
  CHECK(ja["exit_code"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("certify thm1b --rmax 2").exit_code == 0);
  CHECK(run_cli("certify cor2").exit_code == 1);
  CHECK(run_cli("eval polygammak --x 1").exit_code == 3);  // missing order
  CHECK(run_cli("eval gammak --x 1 --backend nosuch").exit_code == 3);
  CHECK(run_cli("certify nosuchclaim").exit_code == 3);
  CHECK(run_cli("eval gammak --x -1").exit_code == 3);  // domain error
  CHECK(run_cli("nosuchcommand").exit_code == 3);
  CHECK(run_cli("identity lemma3 --grid bad:grid").exit_code == 3);
}

TEST_CASE("csv carries the same numbers as json") {
  auto j = run_cli("identity lemma3 --n 1 --t 1");
  auto c = run_cli("identity lemma3 --n 1 --t 1 --format csv");
  REQUIRE(j.exit_code == 0);
  REQUIRE(c.exit_code == 0);
  auto jj = ordered_json::parse(j.out);
  const auto& row = jj["results"][0];
  const std::string lhs = row["lhs"].get<std::string>();
  const std::string residual = row["residual"].get<std::string>();
  CHECK(c.out.find(lhs) != std::string::npos);
  CHECK(c.out.find(residual) != std::string::npos);
  CHECK(c.out.rfind("type,id,x,k,t,m,r,n,verdict,value,bound,residual,"
                    "threshold,margin\n",
                    0) == 0);
}

TEST_CASE("witnesses appear in failing reports") {
  auto r = run_cli("certify cor2 --k 1 --m 2");
  auto j = ordered_json::parse(r.out);
  const auto& cert = j["results"][0];
  CHECK(cert["verdict"] == "FAIL");
  REQUIRE(cert["witnesses"].size() > 0);
  const auto& w = cert["witnesses"][0];
  CHECK(w.contains("x"));
  CHECK(w.contains("value"));
  CHECK(w.contains("bound"));
  CHECK(std::stod(w["value"].get<std::string>()) < 0);
}

TEST_CASE("file output and text format") {
  const std::string path = "report_out.json";
  auto r = run_cli("eval ratioG --x 2 --k 1 --m 2 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  ordered_json j;
  f >> j;
  CHECK(j["results"][0]["value"] == "6");
  std::remove(path.c_str());

  auto t = run_cli("eval ratioG --x 2 --k 1 --m 2 --format text");
  CHECK(t.out.find("= 6") != std::string::npos);
  CHECK(t.out.find("summary: pass 1") != std::string::npos);
}

TEST_CASE("digits flag moves to the high tier") {
  auto r = run_cli("eval lngammak --x 3.5 --k 2 --digits 60 --backend series");
  REQUIRE(r.exit_code == 0);
  auto j = ordered_json::parse(r.out);
  const std::string v = j["results"][0]["value"].get<std::string>();
  // 60 significant digits requested; string must be long enough to hold them
  CHECK(v.size() >= 60);
  const double bound =
      std::stod(j["results"][0]["abs_error_bound"].get<std::string>());
  CHECK(bound < 1e-60);
}
