#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "orbconf/cli.hpp"
#include "orbconf/serialize.hpp"

using namespace orbconf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes `body` to a fresh file under the temp directory.
std::string temp_file(const std::string& name, const std::string& body) {
  const fs::path dir = fs::temp_directory_path() / "orbconf_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("report envelope") {
  const auto spec = temp_file("s237.json", R"({"surface":"sphere","cones":[2,3,7]})");
  const auto r = run({"classify", spec, "--seed", "5"});
  REQUIRE(r.code == cli::ok);
  const auto j = r.json();
  CHECK(j["tool"] == "orbconf");
  CHECK(j["version"] == cli::kVersion);
  CHECK(j["subcommand"] == "classify");
  CHECK(j["config"]["seed"] == 5);
  CHECK(j["result"]["classification"]["is_bad"] == false);
}

TEST_CASE("classify outcomes and exit codes") {
  const auto tear = temp_file("tear.json", R"({"surface":"sphere","cones":[5]})");
  CHECK(run({"classify", tear}).json()["result"]["classification"]["is_bad"] == true);
  const auto plane = temp_file("plane.json", R"({"surface":"plane","cones":[3]})");
  CHECK(run({"classify", plane}).json()["result"]["classification"]["is_aspherical"] == "yes");

  CHECK(run({"classify", temp_file("bad.json", "{not json")}).code == cli::invalid_input);
  CHECK(run({"classify", temp_file("refl.json", R"({"reflectors":1})")}).code == cli::reflector);
  CHECK(run({"classify", "/nonexistent/orbconf.json"}).code == cli::invalid_input);
  CHECK(run({"bogus"}).code == cli::invalid_input);
  CHECK(run({"classify", plane, "--epsilon", "-1"}).code == cli::invalid_input);
}

TEST_CASE("arrangement subcommand") {
  const auto r = run({"arrangement", "--builder", "braid", "--n", "3", "--enumerate", "--primes", "2"});
  REQUIRE(r.code == cli::ok);
  const auto j = r.json()["result"];
  CHECK(j["hyperplane_count"] == 3);
  CHECK(j["chambers"]["total"] == 6);
  CHECK(j["enumeration"]["count"] == 6);
  CHECK(j["finite_field"].size() == 2);

  CHECK(run({"arrangement", "--builder", "braid", "--n", "9", "--simplicial"}).code == cli::guard_rail);
  CHECK(run({"arrangement"}).code == cli::invalid_input);
}

TEST_CASE("verify-cover subcommand") {
  const auto r = run({"verify-cover", "q", "--samples", "20", "--seed", "3"});
  CHECK(r.code == cli::ok);
  CHECK(r.json()["result"]["pass"] == true);
  CHECK(run({"verify-cover", "squaring"}).code == cli::invalid_input);
  CHECK(run({"verify-cover", "nosuchmap"}).code == cli::invalid_input);
}

TEST_CASE("obstruction subcommand") {
  const auto r = run({"obstruction", "--action", "rotation", "--m", "2", "--n", "3"});
  REQUIRE(r.code == cli::ok);
  const auto w = r.json()["result"]["witness"];
  CHECK(w["b1_pair"] == Json::array({3, 4}));
  CHECK(run({"obstruction", "--action", "integer_dihedral", "--n", "2"}).code == cli::invalid_input);
  const auto free_model = temp_file("free.json", R"({"model":{"regular":{"cyclic":4}}})");
  CHECK(run({"obstruction", free_model, "--n", "2"}).code == cli::no_witness);
}

TEST_CASE("groupoid subcommand") {
  const auto cov = temp_file("cov.json", R"({"action":{"regular":{"cyclic":4}},"sub":{"elements":[0,2]}})");
  CHECK(run({"groupoid", cov, "--check", "covering"}).code == cli::ok);
  const auto neg = temp_file("neg.json", R"({"action":{"generators":[[0,5,4,3,2,1]],"points":6}})");
  CHECK(run({"groupoid", neg, "--check", "orbits"}).json()["result"]["orbit_count"] == 4);
  const auto bad = temp_file("corrupt.json",
                             R"({"action":{"regular":{"cyclic":3}},"corrupt":[[4,1,0]]})");
  const auto c = run({"groupoid", bad});
  CHECK(c.code == cli::verification_failed);
  CHECK(c.json()["result"]["passed"] == false);
  const auto invalid = temp_file("corrupt2.json", R"({"action":{"regular":{"cyclic":3}},"corrupt":[[0,8,0]]})");
  CHECK(run({"groupoid", invalid}).code == cli::invalid_input);
}

TEST_CASE("reports are deterministic and --out writes the same bytes") {
  const std::vector<std::string> args{"verify-cover", "qE", "--n", "2", "--samples", "30", "--seed", "11"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);

  const fs::path out = fs::temp_directory_path() / "orbconf_cli_test" / "report.json";
  auto with_out = args;
  with_out.push_back("--out");
  with_out.push_back(out.string());
  const auto c = run(with_out);
  CHECK(c.out.empty());
  std::ifstream in(out);
  std::stringstream body;
  body << in.rdbuf();
  auto written = Json::parse(body.str());
  auto printed = a.json();
  written["config"].erase("out");
  printed["config"].erase("out");
  CHECK(written == printed);
}

TEST_CASE("table format flattens key paths") {
  const auto plane = temp_file("plane_t.json", R"({"surface":"plane","cones":[3]})");
  const auto r = run({"classify", plane, "--format", "table"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("result.classification.is_bad") != std::string::npos);
  CHECK(run({"--version"}).out.find(cli::kVersion) != std::string::npos);
}
