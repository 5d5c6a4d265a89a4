#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kgsymm/cli.hpp"

using kgsymm::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "kgsymm_cli_test_" + name; }

}  // namespace

TEST_CASE("spectrum reports plane Coulomb levels") {
  auto r = run({"spectrum", "--geometry", "plane", "--potential", "coulomb", "--m", "1", "--k", "0.5", "--n-max", "5"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == "kg-symm/spectrum/v1");
  const auto& lv = j["levels"];
  REQUIRE(lv.size() == 3);
  CHECK(lv[0]["n"] == 1);
  CHECK(lv[2]["j"] == 2);
  CHECK(lv[1]["degeneracy"] == 3);
  CHECK(lv[0]["epsilon"].get<double>() == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(lv[1]["epsilon"].get<double>() == doctest::Approx(8.75 / 9.25).epsilon(1e-12));
  CHECK(lv[2]["epsilon"].get<double>() == doctest::Approx(24.75 / 25.25).epsilon(1e-12));
}

TEST_CASE("zero curvature sphere rows equal plane rows") {
  for (const std::string pot : {"coulomb", "oscillator"}) {
    const std::string key = pot == "coulomb" ? "--k" : "--omega";
    auto plane = run({"--format", "tsv", "spectrum", "--potential", pot, key, "0.7", "--n-max", "6"});
    auto sphere = run({"--format", "tsv", "spectrum", "--geometry", "sphere", "--lambda", "0", "--potential", pot, key,
                       "0.7", "--n-max", "6"});
    REQUIRE(plane.code == 0);
    REQUIRE(sphere.code == 0);
    CHECK(plane.out == sphere.out);
  }
}

TEST_CASE("free oscillator sits at the rest mass") {
  auto r = run({"spectrum", "--potential", "oscillator", "--m", "1.5", "--omega", "0", "--n-max", "6"});
  REQUIRE(r.code == 0);
  for (const auto& row : json::parse(r.out)["levels"]) CHECK(row["epsilon"].get<double>() == 1.5);
}

TEST_CASE("tsv output has a header and tab separated rows") {
  auto r = run({"--format", "tsv", "spectrum", "--potential", "oscillator", "--omega", "1", "--n-max", "2"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n\ts\tdegeneracy\tepsilon\tE\tresidual\tsuspect");
  std::getline(in, line);
  CHECK(line.rfind("0\t0.000000000000e+00\t1\t1.839286755214e+00\t", 0) == 0);
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("invalid configurations exit with 2") {
  CHECK(run({"verify-algebra", "--system", "bogus"}).code == 2);
  CHECK(run({"spectrum", "--potential", "coulomb"}).code == 2);
  CHECK(run({"spectrum", "--potential", "coulomb", "--k", "1", "--omega", "1"}).code == 2);
  CHECK(run({"spectrum", "--potential", "coulomb", "--k", "1", "--lambda", "0.1"}).code == 2);
  CHECK(run({"spectrum", "--geometry", "torus", "--k", "1"}).code == 2);
  CHECK(run({"spectrum", "--k", "1", "--m", "-1"}).code == 2);
  CHECK(run({"spectrum", "--k", "1", "--n-min", "5", "--n-max", "3"}).code == 2);
  CHECK(run({"radial", "--geometry", "sphere", "--k", "1", "--lambda", "0.1"}).code == 2);
  CHECK(run({"map", "--spectrum", "nothing"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"spectrum", "--no-such-flag"}).code == 2);
  CHECK(run({"--config", "does-not-exist.json", "spectrum"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-algebra") != std::string::npos);
}

TEST_CASE("verify-algebra on plane Coulomb") {
  auto r = run({"verify-algebra", "--system", "plane-coulomb"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == "kg-symm/algebra-report/v1");
  REQUIRE(j["identities"].size() == 7);
  for (const auto& rec : j["identities"]) {
    CHECK(rec["symbolic_zero"] == true);
    CHECK(rec["corrected_rhs"].is_null());
  }
  for (const auto& a : j["adjoint"]) CHECK(a["holds"] == true);
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("verify-algebra arbitrates the sphere oscillator anticommutator") {
  auto r = run({"verify-algebra", "--system", "sphere-oscillator", "--numeric"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  int corrected = 0;
  for (const auto& rec : j["identities"]) {
    CHECK(rec["confirmed"] == true);
    CHECK(rec["numeric_residual"].is_number());
    if (rec["symbolic_zero"] == false) {
      ++corrected;
      CHECK(rec["name"] == "{J+,J-}");
      CHECK(rec["numeric_residual_corrected"].get<double>() < 1e-6);
      CHECK(rec["numeric_residual"].get<double>() > 1e-2);
      CHECK(rec["printed_refuted"] == true);
    } else {
      CHECK(rec["numeric_residual"].get<double>() < 1e-6);
    }
  }
  CHECK(corrected == 1);
  CHECK(j["summary"]["corrected"] == 1);
}

TEST_CASE("verify-algebra fails when numeric confirmation is impossible") {
  // threshold far below the lattice accuracy
  auto r = run({"verify-algebra", "--system", "sphere-oscillator", "--threshold", "1e-30"});
  CHECK(r.code == 4);
  CHECK(json::parse(r.out)["summary"]["failed"] == 1);
}

TEST_CASE("output is byte-for-byte deterministic") {
  const std::vector<std::string> args = {"verify-algebra", "--system", "sphere-coulomb", "--numeric", "--dump"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run({"limits", "--potential", "oscillator", "--omega", "0.8"});
  auto d = run({"limits", "--potential", "oscillator", "--omega", "0.8"});
  CHECK(c.out == d.out);
}

TEST_CASE("config file supplies missing flags and flags win") {
  const std::string path = temp_path("config.json");
  {
    std::ofstream f(path);
    f << R"({"subcommand": "spectrum", "potential": "coulomb", "k": 0.5, "n-max": 3, "format": "tsv"})";
  }
  auto from_file = run({"--config", path});
  REQUIRE(from_file.code == 0);
  auto direct = run({"--format", "tsv", "spectrum", "--potential", "coulomb", "--k", "0.5", "--n-max", "3"});
  CHECK(from_file.out == direct.out);

  auto overridden = run({"--config", path, "spectrum", "--k", "0.25"});
  REQUIRE(overridden.code == 0);
  CHECK(overridden.out.find("\t8.823529411765e-01\t") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("output file receives the report") {
  const std::string path = temp_path("out.json");
  auto r = run({"--output", path, "map", "--list"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  CHECK(j["spectra"].size() == 5);
  std::remove(path.c_str());
}

TEST_CASE("radial and map agree with the closed forms") {
  auto rad = run({"radial", "--potential", "coulomb", "--k", "0.5", "--n-max", "3"});
  REQUIRE(rad.code == 0);
  const json jr = json::parse(rad.out);
  CHECK(jr["levels"].size() == 3);
  for (const auto& row : jr["levels"]) CHECK(row["rel_diff"].get<double>() < 1e-6);

  auto map = run({"map", "--spectrum", "oscillator-2d", "--m", "2", "--elasticity", "3"});
  REQUIRE(map.code == 0);
  for (const auto& row : json::parse(map.out)["levels"]) CHECK(row["rel_diff"].get<double>() < 1e-10);
}

TEST_CASE("solver failures exit with 3") {
  // Coulomb binding too strong for the finite-difference fixed point
  auto r = run({"radial", "--potential", "coulomb", "--k", "1.5", "--n-max", "1"});
  CHECK(r.code == 3);
  CHECK(!r.err.empty());
}
