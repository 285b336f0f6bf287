#include <cmath>
#include <numbers>

#include "doctest.h"
#include "povm/catalog.hpp"
#include "povm/errors.hpp"
#include "povm/info.hpp"

using namespace povm;

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

TEST_CASE("informational power of named families") {
  CHECK(informational_power(make_hs_povm("tetrahedron")) == doctest::Approx(std::log(4.0 / 3)).epsilon(1e-14));
  CHECK(informational_power(make_hs_povm("octahedron")) == doctest::Approx(kLn2 / 3).epsilon(1e-14));
  CHECK(std::abs(informational_power(make_hs_povm("icosidodecahedron")) - 0.19486) < 5e-6);
  CHECK(informational_power(make_hs_povm("digon")) == doctest::Approx(kLn2).epsilon(1e-14));
}

TEST_CASE("informational power of symmetric custom sets") {
  // The octahedron read back as a custom set goes through the numeric path.
  const HsPovm octa = make_hs_povm("octahedron");
  std::vector<BlochVector> rotated;
  const Eigen::Matrix3d r = Eigen::AngleAxisd(0.3, Eigen::Vector3d(1, 2, 3).normalized()).toRotationMatrix();
  for (const auto& v : octa.vectors()) rotated.push_back(BlochVector::normalized(r * v.vec()));
  CHECK(informational_power(HsPovm::custom(rotated)) == doctest::Approx(kLn2 / 3).epsilon(1e-9));

  const double s = 1 / std::sqrt(2.0);
  const HsPovm disphenoid = HsPovm::custom(
      {BlochVector(s, s, 0), BlochVector(s, -s, 0), BlochVector(-s, 0, s), BlochVector(-s, 0, -s)});
  CHECK_NOTHROW(informational_power(disphenoid));  // D_2 acts transitively

  const HsPovm lopsided = HsPovm::custom({BlochVector(0, 0, 1), BlochVector(0, 0, -1), BlochVector(1, 0, 0),
                                           BlochVector(-1, 0, 0), BlochVector(0, 1, 0), BlochVector(0, -1, 0),
                                           BlochVector::normalized(Eigen::Vector3d(1, 1, 0)),
                                           BlochVector::normalized(Eigen::Vector3d(-1, -1, 0))});
  CHECK_THROWS_AS(informational_power(lopsided), DomainError);
}

TEST_CASE("polygon informational power") {
  CHECK(ngon_informational_power(4) == doctest::Approx(0.5 * kLn2).epsilon(1e-14));
  CHECK(ngon_informational_power(2) == doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(std::abs(ngon_informational_power(10000) - (1 - kLn2)) < 1e-4);
  for (int n = 3; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(ngon_informational_power(n) == doctest::Approx(informational_power(make_hs_povm(Family::ngon, n))).epsilon(1e-12));
  }
}

TEST_CASE("average relative entropy") {
  CHECK(average_relative_entropy(2) == doctest::Approx(kLn2 - 0.5).epsilon(1e-15));
  CHECK(average_relative_entropy(3) == doctest::Approx(0.26527895533477636).epsilon(1e-14));
  CHECK(std::abs(average_relative_entropy(1000000) - 0.42278433509846713) < 1e-5);
}

TEST_CASE("uncertainty bounds") {
  const double alpha = 1.0;
  const std::vector<BlochVector> a{BlochVector(1, 0, 0), BlochVector(-1, 0, 0)};
  const std::vector<BlochVector> b{BlochVector(std::cos(alpha), std::sin(alpha), 0),
                                   BlochVector(-std::cos(alpha), -std::sin(alpha), 0)};
  const double expected = kLn2 + std::log(std::max(std::abs(std::sin(alpha / 2)), std::abs(std::cos(alpha / 2))));
  CHECK(uncertainty_upper_bound(a, b) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(uncertainty_upper_bound(a, a) == doctest::Approx(kLn2).epsilon(1e-14));
  const std::vector<BlochVector> c{BlochVector(0, 1, 0), BlochVector(0, -1, 0)};
  CHECK(uncertainty_upper_bound(a, c) == doctest::Approx(0.5 * kLn2).epsilon(1e-14));
  CHECK(uncertainty_upper_bound(2, 0.0) == doctest::Approx(0.5 * kLn2).epsilon(1e-14));
}

TEST_CASE("entropy bounds") {
  CHECK(entropy_bounds(make_hs_povm("digon")) == std::pair<double, double>(0.0, kLn2));
  const auto t = entropy_bounds(make_hs_povm("tetrahedron"));
  CHECK(t.first == doctest::Approx(kLn2));
  CHECK(t.second == doctest::Approx(std::log(4.0)));
  const auto i = entropy_bounds(make_hs_povm("icosidodecahedron"));
  CHECK(i.first == doctest::Approx(std::log(15.0)));
  CHECK(i.second == doctest::Approx(std::log(30.0)));
}

TEST_CASE("reports") {
  const InfoPowerReport square = info_power_report(make_hs_povm(Family::ngon, 4), 20000);
  REQUIRE(square.uncertainty_bound.has_value());
  CHECK(*square.uncertainty_bound == doctest::Approx(0.5 * kLn2).epsilon(1e-12));
  CHECK(square.W == doctest::Approx(0.5 * kLn2).epsilon(1e-9));

  const InfoPowerReport cube = info_power_report(make_hs_povm("cube"), 20000);
  CHECK_FALSE(cube.uncertainty_bound.has_value());
  CHECK(cube.H_min == doctest::Approx(std::log(8.0) - cube.W).epsilon(1e-12));
  CHECK(std::abs(cube.average_relative_entropy - (kLn2 - 0.5)) < 5e-3);
}

TEST_CASE("table rows") {
  const auto rows = informational_power_table();
  CHECK(rows.size() == 10);
  for (const auto& r : rows) {
    CAPTURE(r.name);
    CHECK(std::abs(r.computed - r.printed) < 5e-6);
  }
}
