#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// Exit-code contract of the command line tool: 0 pass, 1 verification
// failure, 2 usage/input error.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DUFLO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int rc = pclose(pipe);
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

const std::string data_dir = TEST_DATA_DIR;

}  // namespace

TEST_CASE("catalog --list exits 0 and mentions the catalog") {
  const auto r = run_cli("catalog --list");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("sl2") != std::string::npos);
  CHECK(r.output.find("direct_sum") != std::string::npos);
}

TEST_CASE("coeffs pins the first two series coefficients") {
  const auto r = run_cli("coeffs --max-k 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1/48") != std::string::npos);
  CHECK(r.output.find("-1/5760") != std::string::npos);
}

TEST_CASE("check jacobi on sl2 exits 0") {
  const auto r = run_cli("check --check-id jacobi --algebra sl2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("check jacobi on a broken algebra file exits 1 with the violating triple") {
  const auto r = run_cli("check --check-id jacobi --algebra " + data_dir + "/sl2_broken.json");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("violation") != std::string::npos);
}

TEST_CASE("unknown check ids are usage errors (exit 2)") {
  const auto r = run_cli("check --check-id bogus --algebra sl2");
  CHECK(r.exit_code == 2);
}

TEST_CASE("format-violating algebra files are input errors (exit 2)") {
  const auto r = run_cli("check --check-id jacobi --algebra " + data_dir + "/sl2_badformat.json");
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown catalog names are input errors (exit 2)") {
  const auto r = run_cli("invariants --degree 2 --algebra so3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("apply --map duflo reproduces the pinned sl2 value") {
  const auto r = run_cli("apply --map duflo --algebra sl2 --in " + data_dir + "/omega_sl2.json");
  CHECK(r.exit_code == 0);
  // h^2 + 4ef - 2h + 1 on the PBW basis e < h < f
  CHECK(r.output.find("\"coeff\": \"-2\"") != std::string::npos);
  CHECK(r.output.find("\"coeff\": \"4\"") != std::string::npos);
}

TEST_CASE("apply and apply-inverse round trip through JSON") {
  const auto fwd = run_cli("apply --map pbw --algebra sl2 --in " + data_dir + "/omega_sl2.json --out /tmp/duflo_cli_pbw.json");
  CHECK(fwd.exit_code == 0);
  const auto back = run_cli("apply --map pbw-inv --algebra sl2 --in /tmp/duflo_cli_pbw.json");
  CHECK(back.exit_code == 0);
  CHECK(back.output.find("\"coeff\": \"4\"") != std::string::npos);  // 4ef recovered
}

TEST_CASE("star subcommand multiplies two polynomial files") {
  const auto r = run_cli("star --flavor gutt --algebra sl2 --lhs " + data_dir +
                         "/omega_sl2.json --rhs " + data_dir + "/omega_sl2.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("terms") != std::string::npos);
}

TEST_CASE("invariants subcommand reports the sl2 Casimir line") {
  const auto r = run_cli("invariants --degree 2 --algebra sl2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"dim\": 1") != std::string::npos);
}

TEST_CASE("coinvariants subcommand reports dimensions") {
  const auto r = run_cli("coinvariants --degree 2 --algebra sl2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"dim_coinvariants\": 1") != std::string::npos);
}

TEST_CASE("trace subcommand renders the sl2 Killing form") {
  const auto r = run_cli("trace --k 2 --algebra sl2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("8*e*") != std::string::npos);
}

TEST_CASE("missing required options are usage errors") {
  CHECK(run_cli("check --algebra sl2").exit_code == 2);
  CHECK(run_cli("apply --algebra sl2").exit_code == 2);
  CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
}
