// End-to-end checks of the command-line tool through a real subprocess.
// The binary path is injected by the build as GLSPACE_BIN.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string out_path = "cli_test_output.txt";
  const std::string cmd = env_prefix + std::string(GLSPACE_BIN) + " " + args +
                          " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (status != -1 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  std::remove(out_path.c_str());
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("norm verb") {
  const RunResult r =
      run("norm --source torus:cosx --psi exp:0.5 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"value\"") != std::string::npos);
  CHECK(r.output.find("\"argmax_p\"") != std::string::npos);
}

TEST_CASE("config errors exit with 2") {
  CHECK(run("norm --source torus:nope --psi exp:0.5").exit_code == 2);
  CHECK(run("norm --source torus:cosx --psi broken:1").exit_code == 2);
  CHECK(run("").exit_code == 2);           // missing subcommand
  CHECK(run("frobnicate").exit_code == 2); // unknown subcommand
}

TEST_CASE("budget override from the environment") {
  CHECK(run("norm --source torus:cosx --psi exp:0.5",
            "GLSPACE_BUDGET=2000 ").exit_code == 0);
  CHECK(run("norm --source torus:cosx --psi exp:0.5",
            "GLSPACE_BUDGET=bogus ").exit_code == 2);
  CHECK(run("norm --source torus:cosx --psi exp:0.5",
            "GLSPACE_BUDGET=-5 ").exit_code == 2);
}

TEST_CASE("suite reports are byte-identical across runs") {
  const std::string f1 = "cli_suite_a.json";
  const std::string f2 = "cli_suite_b.json";
  const std::string args = "suite --name norms --corpus-limit 2 --out ";
  CHECK(run(args + f1).exit_code == 0);
  CHECK(run(args + f2).exit_code == 0);
  const std::string a = slurp(f1);
  const std::string b = slurp(f2);
  CHECK_FALSE(a.empty());
  CHECK(a == b);
  CHECK(a.find("\"aggregate_pass\": true") != std::string::npos);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("suite failure surfaces in the exit code") {
  const RunResult r =
      run("suite --name norms --corpus-limit 2 --fault-inject");
  CHECK(r.exit_code == 1);
  const RunResult bad = run("suite --name bogus");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("op verb evaluates the conjugate series") {
  const RunResult r = run("op --kind hilbert --source torus:cosx --at 0.5");
  CHECK(r.exit_code == 0);
  // H[cos](0.5) = sin(0.5) = 0.4794...
  CHECK(r.output.find("0.479") != std::string::npos);
}

TEST_CASE("check verb emits csv") {
  const RunResult r =
      run("check --ineq hilbert_lp --corpus 2 --csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("check_id,p,lhs,rhs,ratio,pass") != std::string::npos);
}
