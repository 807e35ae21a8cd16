#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exit-code and output contract of the installed command line tool. The
// binary path is injected by the build.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "cdare_cli_test_out.txt";
  const std::string cmd =
      std::string(CDARE_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  res.output = buf.str();
  return res;
}

fs::path write_instance(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

const char* kCaseI = R"({
  "n": 1, "m": 1,
  "A": [[2, 0]], "B": [[1, 0]], "R": [[1, 0]], "H": [[2, 0]],
  "x_T_witness": [[10, 0]],
  "x0_state": [[1, 0]]
})";

const char* kCaseINoWitness = R"({
  "n": 1, "m": 1,
  "A": [[2, 0]], "B": [[1, 0]], "R": [[1, 0]], "H": [[2, 0]]
})";

const char* kCaseII = R"({
  "n": 1, "m": 1,
  "A": [[2, 0]], "B": [[1, 0]], "R": [[1, 0]], "H": [[-1, 0]]
})";

}  // namespace

TEST_CASE("solve converges on the scalar instance and reports the root") {
  const fs::path inst = write_instance("cli_case_i.json", kCaseI);
  const RunResult res = run_cli("solve --instance " + inst.string() + " --json");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["status"] == "Converged");
  CHECK(std::abs(j["X"][0][0].get<double>() - 5.3722813232690143) <= 1e-9);
  CHECK(j["residual"].get<double>() <= 1e-10);
}

TEST_CASE("solve respects --tol and writes a trace") {
  const fs::path inst = write_instance("cli_case_i.json", kCaseI);
  const fs::path trace = fs::temp_directory_path() / "cli_trace.csv";
  const RunResult res = run_cli("solve --instance " + inst.string() +
                                " --tol 1e-6 --trace " + trace.string());
  CHECK(res.exit_code == 0);
  std::ifstream tf(trace);
  std::string header;
  std::getline(tf, header);
  CHECK(header == "k,residual,monotone_gap,rho,lambda_min_RX,step_norm");
}

TEST_CASE("solve without any initial-matrix source is an input error") {
  const fs::path inst = write_instance("cli_no_witness.json", kCaseINoWitness);
  const RunResult res = run_cli("solve --instance " + inst.string());
  CHECK(res.exit_code == 2);
}

TEST_CASE("solve reports non-convergence with exit 1") {
  const fs::path inst = write_instance("cli_case_ii.json", kCaseII);
  const RunResult res =
      run_cli("solve --instance " + inst.string() + " --x0 3 --max-iter 5 --json");
  CHECK(res.exit_code == 1);
  const json j = json::parse(res.output);
  CHECK(j["status"] == "MaxIterExceeded");
}

TEST_CASE("unknown flags are usage errors") {
  const RunResult res = run_cli("solve --no-such-flag");
  CHECK(res.exit_code == 2);
  const RunResult res2 = run_cli("frobnicate");
  CHECK(res2.exit_code == 2);
}

TEST_CASE("malformed instances are input errors") {
  const fs::path bad = write_instance("cli_bad.json", "{\"n\": 1}");
  const RunResult res = run_cli("solve --instance " + bad.string() + " --x0 10");
  CHECK(res.exit_code == 2);
  const RunResult missing = run_cli("solve --instance /no/such/file.json --x0 10");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("environment variables override default tolerances") {
  const fs::path inst = write_instance("cli_case_ii.json", kCaseII);
  const fs::path out = fs::temp_directory_path() / "cdare_cli_env_out.txt";
  const std::string cmd = std::string("CDARE_MAX_ITER=2 ") + CDARE_CLI_PATH +
                          " solve --instance " + inst.string() +
                          " --x0 3 --json > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 1);
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  const json j = json::parse(buf.str());
  CHECK(j["status"] == "MaxIterExceeded");
  CHECK(j["iterations"].get<int>() == 2);
}

TEST_CASE("check classifies the origin") {
  const fs::path inst = write_instance("cli_case_i.json", kCaseI);
  const RunResult res =
      run_cli("check --instance " + inst.string() + " --X zero --json");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["membership"]["in_R_leq"]["member"] == true);
  CHECK(j["membership"]["in_P"]["member"] == true);
  CHECK(j["membership"]["in_R_geq"]["member"] == false);
}

TEST_CASE("check runs the assumption report") {
  const fs::path inst = write_instance("cli_case_i.json", kCaseI);
  const RunResult res = run_cli("check --instance " + inst.string() +
                                " --X zero --XT 10 --XP zero --json");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["assumptions"]["satisfied"] == true);
}

TEST_CASE("scalar subcommand reproduces the double-root analysis") {
  const RunResult res = run_cli("scalar --a 2 --b 1 --r 1 --h -1 --json");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["D"].get<double>() == 0.0);
  CHECK(j["x_M"].get<double>() == 1.0);
  CHECK(j["x_m"].get<double>() == 1.0);
  CHECK(j["case"] == "CaseII_sublinear");
}

TEST_CASE("simulate reports a tiny optimality gap on the scalar instance") {
  const fs::path inst = write_instance("cli_case_i.json", kCaseI);
  const fs::path traj = fs::temp_directory_path() / "cli_traj.csv";
  const RunResult res = run_cli("simulate --instance " + inst.string() +
                                " --horizon 200 --out " + traj.string() + " --json");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["optimality_gap"].get<double>() <= 1e-6);
  CHECK(j["suboptimality_ok"] == true);
  std::ifstream tf(traj);
  std::string header;
  std::getline(tf, header);
  CHECK(header == "k,x0_re,x0_im,u0_re,u0_im,running_cost");
}
