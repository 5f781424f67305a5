#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ngit/json_io.hpp"
#include "ngit/polynomial.hpp"
#include "ngit/series.hpp"

using namespace ngit;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the installed binary with stderr dropped, capturing stdout and the
// exit code. `prefix` lets a test set environment variables or pipe stdin.
CliResult run_cli(const std::string& args, const std::string& prefix = "") {
  std::string command = prefix + std::string(NGIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = out;
  return r;
}

const char* kWeightedPlaneMap = R"({"vars": ["x", "y", "z"], "weights": [1, 1, 2],
  "params": ["l", "m", "n"],
  "images": {"x": "x", "y": "y", "z": "z + l*x^2 + m*x*y + n*y^2"}})";

std::string write_temp(const std::string& text) {
  std::string path = "/tmp/ngit_cli_test_map.json";
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("invariants payload parses and matches the library") {
  CliResult r = run_cli("invariants --n 3 --format json");
  CHECK(r.exit_code == 0);
  SubalgebraPresentation pres = presentation_from_json(r.out);
  CHECK(pres.generators.size() == 4);
  CHECK(pres.degrees == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(pres.relations.generators().size() == 1);
}

TEST_CASE("nullcone payload lists the cut-out variables") {
  CliResult r = run_cli("nullcone --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x0\nx1\n");
}

TEST_CASE("torus verdicts in both formats") {
  CliResult text = run_cli("stability torus --weights \"2;0;-2\" --support 0,2");
  CHECK(text.exit_code == 0);
  CHECK(text.out == "stable\n");

  CliResult json = run_cli("stability torus --weights \"2;0;-2\" --support 0 --format json");
  CHECK(json.exit_code == 0);
  CHECK(verdict_from_json(json.out) == StabilityVerdict::Unstable);
}

TEST_CASE("config reports criterion and oracle agreement") {
  CliResult r = run_cli("stability config --n 4 --p 1 --q 4 --points 1:0^2,0:1,1:1");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "criterion: strictly-semistable\noracle: strictly-semistable\nagree: yes\n");
}

TEST_CASE("gstatus verdict for a triple root") {
  CliResult r = run_cli("stability gstatus --points 1:1^3,0:1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "unstable\n");
}

TEST_CASE("fg-check text and json renderings") {
  CliResult yes = run_cli("fg-check --n 3 --p 1 --q 4");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "yes\n");
  CliResult no = run_cli("fg-check --n 3 --p 1 --q 3 --format json");
  CHECK(no.exit_code == 0);
  CHECK(no.out == "false\n");
}

TEST_CASE("poincare series match the library") {
  CliResult r = run_cli("poincare --n 5 --format json");
  CHECK(r.exit_code == 0);
  CHECK(series_from_json(r.out) == poincare_quotient_odd(5));
}

TEST_CASE("poincare text table lists even degrees") {
  CliResult r = run_cli("poincare --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 1\n2 1\n4 1\n");
}

TEST_CASE("represent matrix round trips through json") {
  std::string path = write_temp(kWeightedPlaneMap);
  CliResult r = run_cli("represent --map " + path + " --degree 4 --format json");
  CHECK(r.exit_code == 0);
  ParamMatrix m = matrix_from_json(r.out);
  CHECK(m.size() == 9);
  CHECK(m.entries[2][8].str() == "m^2 + 2*l*n");
}

TEST_CASE("grouplaw reads the map from stdin") {
  std::string path = write_temp(kWeightedPlaneMap);
  CliResult r = run_cli("grouplaw --map -", "cat " + path + " | ");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "yes\n");
}

TEST_CASE("json output is byte deterministic across invocations") {
  CliResult a = run_cli("invariants --n 3 --format json");
  CliResult b = run_cli("invariants --n 3 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CliResult c = run_cli("represent --map " + write_temp(kWeightedPlaneMap) +
                        " --degree 4 --format json");
  CliResult d = run_cli("represent --map " + write_temp(kWeightedPlaneMap) +
                        " --degree 4 --format json");
  CHECK(c.out == d.out);
}

TEST_CASE("exit code 1 on malformed input, with empty payload") {
  CHECK(run_cli("stability config --n 5 --p 1 --q 4 --points 1:0^2,0:1,1:1").exit_code == 1);
  CHECK(run_cli("stability config --n 4 --p 0 --q 4 --points 1:0^2,0:1,1:1").exit_code == 1);
  CHECK(run_cli("stability torus --weights \"1,0;0\"").exit_code == 1);
  CHECK(run_cli("stability gstatus --points 1:1^0").exit_code == 1);
  CHECK(run_cli("poincare --n 4").exit_code == 1);
  CHECK(run_cli("poincare --n 3 --partial --stable").exit_code == 1);
  CHECK(run_cli("represent --map /nonexistent --degree 2").exit_code == 1);
  CHECK(run_cli("invariants --n 3 --no-such-flag").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CliResult r = run_cli("poincare --n 4");
  CHECK(r.out.empty());
}

TEST_CASE("exit code 2 when the step budget runs out") {
  CliResult flag = run_cli("invariants --n 3 --budget 5");
  CHECK(flag.exit_code == 2);
  CHECK(flag.out.empty());
  CliResult env = run_cli("invariants --n 3", "NGIT_BUDGET=5 ");
  CHECK(env.exit_code == 2);
  CliResult wins = run_cli("invariants --n 3 --budget 100000", "NGIT_BUDGET=5 ");
  CHECK(wins.exit_code == 0);
  CliResult bad = run_cli("invariants --n 3", "NGIT_BUDGET=abc ");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("poincare --help").exit_code == 0);
}
