#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "povm/cli.hpp"

using namespace povm;
using nlohmann::json;

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result invoke(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& sub, const std::string& family = "cube") {
  RunConfig c;
  c.subcommand = sub;
  c.family = family;
  c.deterministic = true;
  return c;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}
}  // namespace

TEST_CASE("generate and validate round trip through a file") {
  const auto path = std::filesystem::temp_directory_path() / "povm_cli_cube.json";
  RunConfig gen = config("generate");
  gen.out = path.string();
  REQUIRE(invoke(gen).code == kExitOk);

  RunConfig val = config("validate");
  val.input = path.string();
  const Result r = invoke(val);
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["k"] == 8);
  CHECK(j["is_povm"] == true);
  CHECK(j["design_order"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("entropy map rows stay within the entropy bounds") {
  RunConfig c = config("entropy-map", "octahedron");
  c.grid = 1000;
  const Result r = invoke(c);
  REQUIRE(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1002);
  CHECK(rows[0].rfind("# schema_version=1", 0) == 0);
  CHECK(rows[1] == "x,y,z,H,Hrel");
  for (std::size_t i = 2; i < rows.size(); ++i) {
    double x, y, z, h, rel;
    REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf,%lf,%lf", &x, &y, &z, &h, &rel) == 5);
    CHECK(h >= std::log(3.0) - 1e-12);
    CHECK(h <= std::log(6.0) + 1e-12);
  }
}

TEST_CASE("machine output is deterministic") {
  RunConfig c = config("entropy-map", "icosahedron");
  c.grid = 500;
  CHECK(invoke(c).out == invoke(c).out);
  RunConfig m = config("minimize", "tetrahedron");
  CHECK(invoke(m).out == invoke(m).out);
  RunConfig cert = config("certify", "cube");
  CHECK(invoke(cert).out == invoke(cert).out);
}

TEST_CASE("certify") {
  const Result r = invoke(config("certify", "tetrahedron"));
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["dispatch"] == "constant");
  CHECK_FALSE(j.contains("seconds"));

  RunConfig t = config("certify", "digon");
  t.kernel = "tsallis:0.5";
  CHECK(invoke(t).code == kExitOk);
}

TEST_CASE("minimize and classify") {
  const json m = json::parse(invoke(config("minimize", "cube")).out);
  CHECK(m["count"] == 8);
  CHECK(m["relative_value"].get<double>() == doctest::Approx(0.21576155433883581).epsilon(1e-9));

  RunConfig c = config("classify", "cube");
  c.point = std::array<double, 3>{0, 0, 1};
  const json k = json::parse(invoke(c).out);
  CHECK(k["classification"]["kind"] == "max");
  CHECK(k["classification"]["type"] == "II");
}

TEST_CASE("info power, sweep and table") {
  const json w = json::parse(invoke(config("info-power", "tetrahedron")).out);
  CHECK(w["W"].get<double>() == doctest::Approx(std::log(4.0 / 3)).epsilon(1e-14));

  RunConfig s = config("ngon-sweep");
  s.range = "3..6";
  const auto rows = lines(invoke(s).out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1] == "n,W");
  CHECK(rows[3].rfind("4,", 0) == 0);

  const Result t = invoke(config("table5"));
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("max |delta|") != std::string::npos);
}

TEST_CASE("dynamical entropy and bifurcation") {
  RunConfig d = config("dynent", "cube");
  d.rotation = "axis=z,angle=0.7853981633974483";
  d.steps = 2;
  const json j = json::parse(invoke(d).out);
  CHECK(j["dynamical_entropy"].get<double>() == doctest::Approx(1.8880100341060468).epsilon(1e-12));
  CHECK(j["empirical_entropy_rates"].size() == 2);

  const json b = json::parse(invoke(config("bifurcation")).out);
  CHECK(b["threshold"].get<double>() == doctest::Approx(1.17056).epsilon(1e-5));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke(config("no-such-command")).code == kExitUsage);
  CHECK(invoke(config("generate", "heptahedron")).code == kExitUsage);
  RunConfig r = config("dynent");
  r.rotation = "axis=z";
  CHECK(invoke(r).code == kExitUsage);
  RunConfig k = config("certify");
  k.kernel = "bogus";
  const Result res = invoke(k);
  CHECK(res.code == kExitUsage);
  CHECK_FALSE(res.err.empty());
}

TEST_CASE("argument parsers") {
  CHECK(parse_range("3..64") == std::pair<int, int>(3, 64));
  CHECK_THROWS(parse_range("64..3"));
  CHECK(parse_kernel("renyi:2").kind() == EntropyKernel::Kind::renyi);
  CHECK(format_g17(0.1) == "0.10000000000000001");
  CHECK(resolve_families("all").size() == 9);
  const auto r = parse_rotation("axis=1,1,0,angle=0.5");
  CHECK(r.matrix().determinant() == doctest::Approx(1.0));
}
