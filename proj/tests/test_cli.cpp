#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "k3gonal/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = k3g::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void check_round_trip(const std::string& text) {
  const auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
}

}  // namespace

TEST_CASE("golden outputs") {
  auto r = run({"hilb", "class", "-p", "8", "-k", "2", "--delta", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "H - 5*r_k\n");
  r = run({"gonality", "delta0", "-p", "9", "-k", "4", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 (verified)\n");
  r = run({"hilb", "qvalues", "-k", "3", "--pmax", "300", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "q\n-3\n-9/4\n-2\n-1\n-1/4\n");
}

TEST_CASE("table mode uses unicode fractions") {
  const auto r = run({"hilb", "q", "-p", "9", "-k", "4", "--delta", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "−2⁄3\n");
  const auto t = run({"--format", "table", "hilb", "cone", "-p", "8", "-k", "2", "--t", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("14⁄5") != std::string::npos);
  CHECK(t.out.find("not-nef") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"hilb", "class", "-p", "8", "-k", "2", "--delta", "3"}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"hilb", "class", "-p", "8"}).code == 1);
  CHECK(run({"hilb", "class", "-p", "x", "-k", "2", "--delta", "4"}).code == 1);
  CHECK(run({"chains", "witness", "-p", "8", "-k", "2", "--delta", "3"}).code == 1);
  CHECK(run({"--format", "xml", "hilb", "rays", "-p", "8", "-k", "2"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json outputs round-trip byte for byte") {
  const std::vector<std::vector<std::string>> commands = {
      {"bn", "rho", "-g", "9", "-r", "1", "-d", "6"},
      {"bn", "check", "-p", "9", "-k", "4", "--delta", "2"},
      {"bn", "check", "-p", "9", "--delta", "2", "-r", "2", "-d", "5"},
      {"gonality", "delta0", "-p", "12", "-k", "3", "--verify"},
      {"gonality", "dims", "-p", "8", "-k", "2", "--delta", "4"},
      {"gonality", "case", "-p", "9", "-k", "4", "--delta", "2"},
      {"chains", "witness", "-p", "8", "-k", "2", "--delta", "5"},
      {"chains", "minimal", "-p", "9", "-k", "4"},
      {"chains", "enumerate", "-p", "6", "-k", "2"},
      {"chains", "stable", "-p", "8", "-k", "2", "--alpha", "1:2,2:1,4:1"},
      {"pencil", "verify", "-k", "3", "--samples", "10", "--seed", "42"},
      {"pencil", "wedge", "--f", "0,-1,0,1", "--g", "2,0,1,0"},
      {"hilb", "class", "-p", "9", "-k", "4", "--delta", "2"},
      {"hilb", "optimal", "-p", "12", "-k", "3"},
      {"hilb", "q", "-p", "6", "-k", "2", "--delta", "2"},
      {"hilb", "cone", "-p", "8", "-k", "2", "--t", "2"},
      {"hilb", "qvalues", "-k", "2", "--pmax", "50"},
      {"hilb", "lagrangian", "-p", "10", "-k", "5"},
      {"hilb", "lagrangian", "-p", "4", "-k", "2"},
      {"hilb", "rays", "-p", "8", "-k", "2"},
      {"hilb", "minq", "-p", "12", "-k", "3"},
      {"hilb", "isotropic", "-p", "5", "-k", "2"},
      {"hilb", "ht", "-p", "37", "-k", "10"},
      {"hilb", "realize", "-k", "4", "--rho", "1", "--beta", "2", "-m", "1"},
      {"hilb", "scan", "--pmax", "12", "--kmax", "3"},
  };
  for (auto cmd : commands) {
    cmd.push_back("--format");
    cmd.push_back("json");
    const auto r = run(cmd);
    INFO(cmd[0] << " " << cmd[1]);
    REQUIRE(r.code == 0);
    check_round_trip(r.out);
    CHECK(run(cmd).out == r.out);
  }
}

TEST_CASE("rays schema") {
  const auto r = run({"hilb", "rays", "-p", "12", "-k", "3", "--format", "json"});
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"p", "k", "status", "rays", "q", "notes"});
  CHECK(j["status"] == "PROVEN_MINQ");
  CHECK(j["rays"][1]["a"] == 1);
  CHECK(j["rays"][1]["y"] == 10);
  CHECK(j["q"] == "-3");
}

TEST_CASE("pencil verify echoes the seed") {
  const auto r = run({"pencil", "verify", "-k", "2", "--samples", "5", "--seed", "99", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["seed"] == 99);
  CHECK(j["exact_checks_passed"] == true);
}

TEST_CASE("big integers survive json") {
  const auto r = run({"hilb", "class", "-p", "100000000000000000000", "-k", "2", "--delta",
                      "100000000000000000000", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["p"] == "100000000000000000000");
  CHECK(j["class"]["y"] == 1);
}

TEST_CASE("--out writes a file") {
  const std::string path = "k3gonal_cli_test_out.txt";
  const auto r = run({"hilb", "class", "-p", "8", "-k", "2", "--delta", "4", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "H - 5*r_k");
  std::remove(path.c_str());
}

TEST_CASE("enumeration cap via environment") {
  CHECK(run({"chains", "enumerate", "-p", "61", "-k", "2"}).code == 1);
  setenv("K3GONAL_MAX_P", "61", 1);
  CHECK(run({"chains", "enumerate", "-p", "61", "-k", "2", "--format", "csv"}).code == 0);
  unsetenv("K3GONAL_MAX_P");
}
