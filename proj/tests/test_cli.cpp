#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/proc.hpp"

using blp::testing::fixture_dir;
using blp::testing::run_cli;
using blp::testing::RunResult;

namespace {

std::string path_blp() { return fixture_dir() + "/path.blp"; }
std::string uniq_blp() { return fixture_dir() + "/uniq.blp"; }

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("solve reports the PATH optimum") {
  const RunResult r = run_cli("solve " + path_blp());
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "OPTIMAL value 1");
  CHECK(r.output.find("y: 1 1\n") != std::string::npos);
}

TEST_CASE("decision commands and their exit codes") {
  CHECK(run_cli("decide-opt " + path_blp() + " --alpha 1").exit_code == 0);
  const RunResult no = run_cli("decide-opt " + path_blp() + " --alpha 1/2");
  CHECK(no.exit_code == 1);
  CHECK(first_line(no.output) == "NO");
  for (const char* alpha : {"1/2", "1", "100"}) {
    const RunResult pess =
        run_cli("decide-pess " + path_blp() + " --alpha " + alpha);
    CHECK(pess.exit_code == 1);
    CHECK(first_line(pess.output) == "NO");
  }
  CHECK(run_cli("decide-pess " + uniq_blp() + " --alpha 0").exit_code == 0);
  CHECK(run_cli("decide-pess " + uniq_blp() + " --alpha -1").exit_code == 1);
}

TEST_CASE("bigm prints both computed and tight bounds") {
  const RunResult r = run_cli("bigm " + path_blp());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "Mp 240  Md 0\n");
  const RunResult tight = run_cli("bigm " + path_blp() + " --tight");
  CHECK(tight.output == "Mp 240  Md 0\nMp* 2  Md* 0\n");
}

TEST_CASE("certificate round trip through files") {
  const std::string cert = "/tmp/blp_cli_test.cert";
  CHECK(run_cli("decide-opt " + path_blp() + " --alpha 1 --cert-out " + cert)
            .exit_code == 0);
  const RunResult check = run_cli("check-cert " + path_blp() + " " + cert + " --alpha 1");
  CHECK(check.exit_code == 0);
  CHECK(first_line(check.output) == "ACCEPTED");
  const RunResult tighter =
      run_cli("check-cert " + path_blp() + " " + cert + " --alpha 1/2");
  CHECK(tighter.exit_code == 1);
  CHECK(first_line(tighter.output) == "REJECTED system-infeasible");
}

TEST_CASE("reformulate and solve-milp agree with solve") {
  const std::string lp = "/tmp/blp_cli_test.lp";
  const RunResult wrote = run_cli("reformulate " + path_blp() + " -o " + lp);
  CHECK(wrote.exit_code == 0);
  std::ifstream golden_in(fixture_dir() + "/golden/path.lp", std::ios::binary);
  std::ostringstream golden;
  golden << golden_in.rdbuf();
  std::ifstream written_in(lp, std::ios::binary);
  std::ostringstream written;
  written << written_in.rdbuf();
  CHECK(written.str() == golden.str());

  CHECK(first_line(run_cli("solve-milp " + path_blp()).output) == "OPTIMAL value 1");
  // Sabotaged Mp cuts off the only bilevel-feasible point.
  const RunResult sabotage = run_cli("solve-milp " + path_blp() + " --mp 1/2");
  CHECK(sabotage.exit_code == 1);
  CHECK(first_line(sabotage.output) == "INFEASIBLE");
}

TEST_CASE("gen-gadget output solves to the knapsack optimum") {
  const std::string out = "/tmp/blp_cli_test_gadget.blp";
  CHECK(run_cli("gen-gadget " + fixture_dir() + "/knapsack2.bin -o " + out).exit_code == 0);
  const RunResult solved = run_cli("solve " + out);
  CHECK(solved.exit_code == 0);
  CHECK(first_line(solved.output) == "OPTIMAL value -5");
}

TEST_CASE("identical invocations produce byte-identical reports") {
  const std::string args = "solve " + path_blp();
  CHECK(run_cli(args).output == run_cli(args).output);
  const std::string bigm_args = "bigm " + path_blp() + " --tight";
  CHECK(run_cli(bigm_args).output == run_cli(bigm_args).output);
}

TEST_CASE("parse and dimension errors map to exit codes 64 and 65") {
  CHECK(run_cli("solve /nonexistent_instance.blp").exit_code == 64);
  {
    std::ofstream bad("/tmp/blp_cli_bad.blp");
    bad << "BLP v1\ndims: 0 2 1 1\nc:\nd: 1 x\n";
  }
  CHECK(run_cli("solve /tmp/blp_cli_bad.blp").exit_code == 64);
  {
    std::ofstream bad("/tmp/blp_cli_dim.blp");
    bad << "BLP v1\ndims: 0 2 1 1\nc:\nd: 1 0\nq: 0 0\nA:\n5\nB:\n1 0\na: 1\nT:\nW:\n1 1\nh: 2\n";
  }
  CHECK(run_cli("solve /tmp/blp_cli_dim.blp").exit_code == 65);
  // Missing alpha is a usage problem surfaced as a parse failure.
  CHECK(run_cli("decide-opt " + path_blp()).exit_code == 64);
}
