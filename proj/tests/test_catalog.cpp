#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "povm/catalog.hpp"
#include "povm/errors.hpp"

using namespace povm;

namespace {
const double kTau = (1 + std::sqrt(5.0)) / 2;
const double kSqrt5 = std::sqrt(5.0);

void check_set(const char* family, std::vector<double> expected) {
  std::sort(expected.begin(), expected.end());
  const auto t = interpolation_set(make_hs_povm(family));
  CAPTURE(family);
  REQUIRE(t.size() == expected.size());
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::abs(t[i] - expected[i]) < 1e-12);
}
}  // namespace

TEST_CASE("cardinalities of the named families") {
  const std::pair<const char*, int> sizes[] = {
      {"digon", 2},         {"tetrahedron", 4},    {"octahedron", 6},
      {"cube", 8},          {"cuboctahedron", 12}, {"icosahedron", 12},
      {"dodecahedron", 20}, {"icosidodecahedron", 30}, {"9-gon", 9},
  };
  for (const auto& [name, k] : sizes) {
    const HsPovm povm = make_hs_povm(name);
    CAPTURE(name);
    CHECK(povm.size() == k);
    const auto report = validate_povm(povm.vectors());
    CHECK(report.is_povm);
    CHECK(report.centroid_norm < 1e-12);
  }
}

TEST_CASE("canonical orientations") {
  const HsPovm digon = make_hs_povm("digon");
  CHECK(digon.vectors()[0].z() == 1.0);
  CHECK(digon.vectors()[1].z() == -1.0);

  const HsPovm tetra = make_hs_povm("tetrahedron");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(tetra.vectors()[i].dot(tetra.vectors()[j]) == doctest::Approx(-1.0 / 3));

  const HsPovm ngon = make_hs_povm(Family::ngon, 7);
  CHECK((ngon.fiducial().vec() - Eigen::Vector3d::UnitX()).norm() < 1e-15);
  for (const auto& v : ngon.vectors()) CHECK(v.z() == 0.0);

  CHECK((make_hs_povm("icosidodecahedron").fiducial().vec() - Eigen::Vector3d::UnitZ()).norm() < 1e-15);
  CHECK_THROWS_AS(make_hs_povm("heptahedron"), std::invalid_argument);
  CHECK_THROWS_AS(make_hs_povm(Family::ngon, 1), std::invalid_argument);
}

TEST_CASE("rectangle family") {
  const HsPovm r = make_rectangle_povm(1.0);
  REQUIRE(r.size() == 4);
  CHECK(r.vectors()[0].dot(r.vectors()[2]) == doctest::Approx(std::cos(1.0)).epsilon(1e-15));
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  const HsPovm third = make_rectangle_povm(std::numbers::pi / 3);
  for (const auto& v : third.vectors()) {
    CHECK(v.z() == 0.0);
    c += v.vec();
  }
  CHECK(c.norm() < 1e-15);
  CHECK(make_rectangle_povm(std::numbers::pi / 2).family() == Family::ngon);
  CHECK_THROWS_AS(make_rectangle_povm(0.0), DomainError);
  CHECK_THROWS_AS(make_rectangle_povm(4.0), DomainError);
}

TEST_CASE("validation verdicts") {
  for (int n = 3; n <= 12; ++n) {
    const auto report = validate_povm(make_hs_povm(Family::ngon, n).vectors());
    CHECK(report.is_povm);
    CHECK_FALSE(report.informationally_complete);
  }
  CHECK(validate_povm(make_hs_povm("tetrahedron").vectors()).informationally_complete);
  const std::vector<BlochVector> twice{BlochVector(0, 0, 1), BlochVector(0, 0, 1)};
  CHECK_FALSE(validate_povm(twice).is_povm);
  CHECK_THROWS_AS(HsPovm::custom(twice), DomainError);
}

TEST_CASE("spherical design orders") {
  CHECK(spherical_design_order(make_hs_povm("tetrahedron").vectors()) == 2);
  CHECK(spherical_design_order(make_hs_povm("octahedron").vectors()) == 3);
  CHECK(spherical_design_order(make_hs_povm("cube").vectors()) == 3);
  CHECK(spherical_design_order(make_hs_povm("cuboctahedron").vectors()) == 3);
  CHECK(spherical_design_order(make_hs_povm("icosahedron").vectors()) == 5);
  CHECK(spherical_design_order(make_hs_povm("dodecahedron").vectors()) == 5);
  CHECK(spherical_design_order(make_hs_povm("icosidodecahedron").vectors()) == 5);
  CHECK(spherical_design_order(make_hs_povm("digon").vectors()) == 1);

  // Tetragonal disphenoid: a frame with zero centroid that is not tight.
  const double s = 1 / std::sqrt(2.0);
  const std::vector<BlochVector> disphenoid{BlochVector(s, s, 0), BlochVector(s, -s, 0), BlochVector(-s, 0, s),
                                            BlochVector(-s, 0, -s)};
  CHECK(validate_povm(disphenoid).is_povm);
  CHECK(spherical_design_order(disphenoid) < 2);
}

TEST_CASE("interpolation sets") {
  check_set("octahedron", {-1, 0, 1});
  check_set("tetrahedron", {-1, 1.0 / 3});
  check_set("cube", {-1, -1.0 / 3, 1.0 / 3, 1});
  check_set("cuboctahedron", {-1, -0.5, 0, 0.5, 1});
  check_set("icosahedron", {-1, -1 / kSqrt5, 1 / kSqrt5, 1});
  check_set("dodecahedron", {-1, -kSqrt5 / 3, -1.0 / 3, 1.0 / 3, kSqrt5 / 3, 1});
  check_set("icosidodecahedron",
            {-1, -kTau / 2, -0.5, -1 / (2 * kTau), 0, 1 / (2 * kTau), 0.5, kTau / 2, 1});
  for (int n : {4, 6}) {
    std::vector<double> t;
    for (int j = 1; j <= n; ++j) t.push_back(std::cos(2 * std::numbers::pi * j / n));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }), t.end());
    const auto got = interpolation_set(make_hs_povm(Family::ngon, n));
    REQUIRE(got.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::abs(got[i] - t[i]) < 1e-12);
  }
}

TEST_CASE("JSON round trip") {
  const HsPovm cube = make_hs_povm("cube");
  const HsPovm back = povm_from_json(povm_to_json(cube));
  CHECK(back.family() == Family::cube);
  REQUIRE(back.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK((back.vectors()[i].vec() - cube.vectors()[i].vec()).norm() == 0.0);

  const HsPovm custom = povm_from_json(R"({"vectors": [[0,0,1],[0,0,-1],[1,0,0],[-1,0,0]], "family": "custom"})");
  CHECK(custom.family() == Family::custom);
  CHECK(custom.size() == 4);
  CHECK_THROWS(povm_from_json("{\"vectors\": 3}"));
}
