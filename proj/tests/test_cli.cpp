#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Exercises the installed binary end to end: exit-code contract, JSON
// well-formedness, config echo, and byte determinism.  The binary and the
// sample lattice files are injected by the build.

namespace {

using Json = nlohmann::json;

const std::string kBin = GABORCERT_CLI_BIN;
const std::string kData = GABORCERT_DATA_DIR;

struct RunResult {
  int exit_code = -1;
  Json report;       // parsed --out document (when requested)
  std::string text;  // raw --out bytes
};

// Runs `gaborcert <args> --out <tmp>`; stdout/stderr go to /dev/null so
// test logs stay readable (diagnostics are re-checked via exit codes).
RunResult run(const std::string& args, bool with_out = true) {
  static int counter = 0;
  std::string out_path =
      "/tmp/gaborcert_cli_test_" + std::to_string(counter++) + ".json";
  std::string cmd = kBin + " " + args;
  if (with_out) cmd += " --out " + out_path;
  cmd += " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (with_out) {
    std::ifstream in(out_path);
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      r.text = ss.str();
      if (!r.text.empty()) r.report = Json::parse(r.text);
    }
    std::remove(out_path.c_str());
  }
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "/tmp/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("certify: exit codes and report shape") {
  // the product-lattice certification runs end to end and reports 0
  RunResult ok = run("certify " + kData + "/corollary_product.lat --height 10000");
  CHECK(ok.exit_code == 0);
  REQUIRE(ok.report.is_object());
  CHECK(ok.report["tool"] == "gaborcert");
  CHECK(ok.report["command"] == "certify");
  CHECK(ok.report["config"]["height"] == "10000");
  CHECK(ok.report["results"]["criterion"]["overall"] == "CertifiedUpToHeight");
  CHECK(ok.report["results"]["criterion"]["density_ok"] == true);
  CHECK(ok.report["results"]["criterion"]["transcendence"]["overall"] ==
        "TranscendentalUpToHeight");
  CHECK(ok.report["warnings"].empty());

  // all-rational n = 2: exit 1 with the relation certificate in the report
  RunResult rat = run("certify " + kData + "/rational_n2.lat");
  CHECK(rat.exit_code == 1);
  const Json& deg =
      rat.report["results"]["criterion"]["transcendence"]["degrees"][0];
  CHECK(deg["verdict"]["kind"] == "RelationFound");
  CHECK_FALSE(deg["verdict"]["relation"].empty());
  CHECK(deg["verdict"]["residual"] == 0.0);

  // critical density: not certified on density alone
  RunResult crit = run("certify " + kData + "/unit.lat");
  CHECK(crit.exit_code == 1);
  CHECK(crit.report["results"]["criterion"]["density_ok"] == false);

  // below-threshold rational lattice certifies (n = 1 needs no search)
  CHECK(run("certify " + kData + "/dense_rational.lat").exit_code == 0);

  // super mode at s = 1 wants covolume below 1/2
  std::string dense = write_temp("gaborcert_cov04.lat",
                                 "n = 1\n2/5 0\n0 1\n");
  RunResult super_ok = run("certify " + dense + " --mode super --s 1");
  CHECK(super_ok.exit_code == 0);
  CHECK(super_ok.report["results"]["criterion"]["threshold"] == 0.5);
  CHECK(run("certify " + kData + "/dense_rational.lat --mode super --s 1")
            .exit_code == 1);  // 1/2 < 1/2 fails: the inequality is strict

  // malformed lattice file: exit 64
  std::string bad = write_temp("gaborcert_bad.lat", "n = x\nnot a lattice\n");
  CHECK(run("certify " + bad).exit_code == 64);
  CHECK(run("certify /nonexistent/missing.lat").exit_code == 64);
}

TEST_CASE("certify: crosscheck ladder is attached") {
  RunResult r = run("certify " + kData +
                    "/dense_rational.lat --crosscheck --ladder 4:10,6:20");
  CHECK(r.exit_code == 0);
  const Json& bounds = r.report["results"]["bounds"];
  REQUIRE(bounds["ladder"].size() == 2);
  CHECK(bounds["a_est"].get<double>() > 0.0);
  CHECK(bounds["b_est"].get<double>() >= bounds["a_est"].get<double>());
  CHECK(bounds["tail_bound"].get<double>() >= 0.0);

  CHECK(run("certify " + kData +
            "/dense_rational.lat --crosscheck --ladder nonsense")
            .exit_code == 64);
}

TEST_CASE("transcendence: verdict-driven exit codes") {
  CHECK(run("transcendence " + kData +
            "/corollary_product.lat --height 1000 --mode numeric")
            .exit_code == 0);

  RunResult rat =
      run("transcendence " + kData + "/rational_n2.lat --mode exact");
  CHECK(rat.exit_code == 1);
  CHECK(rat.report["results"]["transcendence"]["overall"] ==
        "NotTranscendental");
  CHECK(rat.report["results"]["transcendence"]["complete"] == true);
}

TEST_CASE("framebounds: ladder echo and estimates") {
  RunResult r =
      run("framebounds " + kData + "/dense_rational.lat --ladder 4:10,6:20");
  CHECK(r.exit_code == 0);
  CHECK(r.report["command"] == "framebounds");
  CHECK(r.report["config"]["ladder"].size() == 2);
  const Json& rungs = r.report["results"]["bounds"]["ladder"];
  REQUIRE(rungs.size() == 2);
  CHECK(rungs[0]["radius"] == 4.0);
  CHECK(rungs[0]["degree"] == 10);
  CHECK(rungs[1]["a_est"].get<double>() > 0.0);
}

TEST_CASE("thresholds: jet table against the closed-form targets") {
  RunResult r = run("thresholds " + kData +
                    "/unit.lat --k-list 1,2 --radius 6 --degree 300");
  CHECK(r.exit_code == 0);
  const Json& res = r.report["results"];
  CHECK(res["targets"]["lambda0"] == 1.0);
  CHECK(res["targets"]["valid"] == true);
  const Json& rows = res["asymptotics"]["rows"];
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["mu"]["value"] == 0);
  CHECK(rows[1]["mu"]["value"] == 1);
  CHECK(rows[1]["sigma"]["value"] == 1);
  CHECK(res["asymptotics"]["flagged_cells"] == 0);
  CHECK(r.report["warnings"].empty());

  // domain error (radius too small to hold a jet section): exit 65
  CHECK(run("thresholds " + kData + "/unit.lat --radius 0.5").exit_code == 65);
}

TEST_CASE("reproduce: pinned scenarios and unknown names") {
  RunResult r = run("reproduce n1-multiwindow");
  CHECK(r.exit_code == 0);
  CHECK(r.report["results"]["pass"] == true);
  const Json& anchors = r.report["results"]["anchors"];
  REQUIRE(anchors.size() == 9);
  for (const auto& a : anchors) CHECK(a["pass"] == true);

  CHECK(run("reproduce no-such-scenario").exit_code == 64);
}

TEST_CASE("reports are byte-stable modulo the wall clock") {
  const std::string args =
      "certify " + kData + "/corollary_product.lat --height 10000";
  RunResult a = run(args);
  RunResult b = run(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  a.report.erase("wall_clock_ms");
  b.report.erase("wall_clock_ms");
  CHECK(a.report.dump(2) == b.report.dump(2));
}

TEST_CASE("usage errors and help") {
  CHECK(run("", false).exit_code > 2);          // missing subcommand
  CHECK(run("--help", false).exit_code == 0);   // help is not an error
  CHECK(run("certify", false).exit_code > 2);   // missing lattice path
}
