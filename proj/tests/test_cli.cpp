#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(DIASTAT_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

std::string temp_path(const std::string& stem) {
  return "/tmp/diastat_cli_test_" + std::to_string(getpid()) + "_" + stem;
}

}  // namespace

TEST_CASE("invariants emits the descriptor and exact entropy") {
  const auto result = run_cli("invariants I:2,3 --json");
  CHECK(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(nlohmann::json(j["descriptor"]).dump() ==
        R"({"a":2,"b":1,"dim":6,"family":"I","genus":5,"params":[2,3],"rank":2})");
  CHECK(j["entropy"] == "4/5");

  const auto table = run_cli("invariants --list");
  CHECK(table.exit_code == 0);
  CHECK(table.out.find("VI") != std::string::npos);
  CHECK(table.out.find("17/18") != std::string::npos);
}

TEST_CASE("entropy subcommand prints exact rationals") {
  CHECK(run_cli("entropy I:2,3").out == "4/5\n");
  CHECK(run_cli("entropy I:2,3 --bergman").out == "4/5\n");
  CHECK(run_cli("entropy I:2,3 --scale 2").out == "2/5\n");
  CHECK(run_cli("entropy I:2,3 --scale 4/5").out == "1/1\n");
  CHECK(run_cli("entropy VI").out == "17/18\n");
}

TEST_CASE("root constants round trip through a file") {
  const std::string path = temp_path("constants.json");
  const auto dumped = run_cli("root-constants I:2,3 --output " + path);
  CHECK(dumped.exit_code == 0);

  std::ifstream in(path);
  REQUIRE(in.good());
  const auto j = nlohmann::json::parse(in);
  CHECK(j["rank"] == 2);
  CHECK(j["p"][1] == "2/1");

  const auto round_trip = run_cli("entropy --from-constants " + path);
  CHECK(round_trip.exit_code == 0);
  CHECK(round_trip.out == "4/5\n");
  std::remove(path.c_str());
}

TEST_CASE("epsilon CSV output is deterministic") {
  const std::string command = "epsilon disk --lambda 2 --radii 0,0.3,0.6,0.9 --csv";
  const auto first = run_cli(command);
  const auto second = run_cli(command);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(count_lines(first.out) == 5);
  CHECK(first.out.rfind("re,im,radius,epsilon,N,tail_flag\n", 0) == 0);
  CHECK(first.out.find("0.318309886") != std::string::npos);
}

TEST_CASE("thread count never changes the output bytes") {
  const std::string tail =
      "epsilon typeI:2,2 --lambda 5 --degree 2 --radii 0,0.3 --csv";
  const auto serial = run_cli("--threads 1 " + tail);
  const auto parallel = run_cli("--threads 4 " + tail);
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("epsilon degenerate weight exits with the numeric failure code") {
  const auto result = run_cli("epsilon disk --lambda 1 --radii 0,0.5 --csv");
  CHECK(result.exit_code == 2);
}

TEST_CASE("explicit points accept row-major JSON matrices") {
  const auto block = run_cli(
      "epsilon typeI:2,2 --lambda 5 --degree 2 --points "
      "'[[\"0+0i\",\"0+0i\",\"0+0i\",\"0+0i\"],"
      "[\"0.3+0i\",\"0+0i\",\"0+0i\",\"0.2+0i\"]]' --csv");
  CHECK(block.exit_code == 0);
  CHECK(count_lines(block.out) == 3);
  CHECK(block.out.find("0.3,0,0.3,") != std::string::npos);

  CHECK(run_cli("epsilon disk --lambda 2 --points 'not json'").exit_code == 64);
  CHECK(run_cli("epsilon disk --lambda 2 --points '[[\"0+0i\",\"0+0i\"]]'")
            .exit_code == 1);  // wrong dimension
}

TEST_CASE("check-balanced distinguishes verdicts through exit codes") {
  const auto balanced = run_cli("check-balanced disk --lambda 1.2");
  CHECK(balanced.exit_code == 0);
  CHECK(balanced.out.find("balanced") == 0);

  const auto degenerate = run_cli("check-balanced disk --lambda 0.9");
  CHECK(degenerate.exit_code == 2);
  CHECK(degenerate.out.find("degenerates") != std::string::npos);

  const auto boundary = run_cli("check-balanced disk --lambda 1.0");
  CHECK(boundary.exit_code == 2);

  // Deviation ~1.1e-5 against tolerance 1e-5 falls in the inconclusive band.
  const auto inconclusive = run_cli(
      "check-balanced disk --lambda 2 --degree 64 --radii 0,0.3,0.6,0.9 "
      "--angles 1 --rel-tol 1e-5");
  CHECK(inconclusive.exit_code == 2);
  CHECK(inconclusive.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("estimate-entropy emits the bracket as JSON") {
  const auto result = run_cli("estimate-entropy disk --mu 2 --tol 0.05");
  CHECK(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["lower"].get<double>() <= 0.5);
  CHECK(j["upper"].get<double>() >= 0.5);
  CHECK(j["lower"].get<double>() >= 0.45);
  CHECK(j["upper"].get<double>() <= 0.55);
  CHECK(j["z0"][0] == "0+0i");
  CHECK(j["probes"].size() >= 3);

  const auto off_origin = run_cli("estimate-entropy disk --z0 0.4+0i --tol 0.05");
  CHECK(off_origin.exit_code == 0);
}

TEST_CASE("exit codes separate usage, validation and numeric failures") {
  CHECK(run_cli("frobnicate").exit_code == 64);         // unknown subcommand
  CHECK(run_cli("invariants Q:1").exit_code == 64);     // unparseable family
  CHECK(run_cli("invariants I:x,2").exit_code == 64);   // unparseable params
  CHECK(run_cli("epsilon torus --lambda 2").exit_code == 64);
  CHECK(run_cli("").exit_code == 64);                   // no subcommand

  CHECK(run_cli("invariants I:3,2").exit_code == 1);    // violates p <= q
  CHECK(run_cli("epsilon ball:0 --lambda 3").exit_code == 1);
  CHECK(run_cli("estimate-entropy disk --z0 1.5+0i").exit_code == 1);
  CHECK(run_cli("estimate-entropy typeI:2,2").exit_code == 1);  // unsupported kind

  CHECK(run_cli("estimate-entropy disk --mu 33554432").exit_code == 2);  // no bracket
}

TEST_CASE("output files receive exactly the stdout payload") {
  const std::string path = temp_path("epsilon.csv");
  const auto direct = run_cli("epsilon disk --lambda 2 --radii 0,0.5 --csv");
  const auto to_file = run_cli("epsilon disk --lambda 2 --radii 0,0.5 --csv --output " + path);
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == direct.out);
  std::remove(path.c_str());
}
