#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "povm/catalog.hpp"
#include "povm/entropy.hpp"
#include "povm/errors.hpp"
#include "povm/info.hpp"
#include "povm/symmetry.hpp"

using namespace povm;

namespace {
constexpr double kLn2 = std::numbers::ln2;
const double kTau = (1 + std::sqrt(5.0)) / 2;

const char* const kFamilies[] = {"digon",        "5-gon",       "tetrahedron",  "octahedron",       "cube",
                                 "cuboctahedron", "icosahedron", "dodecahedron", "icosidodecahedron"};

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized();
}

// Angle of the projection of u on the z = 0 plane, folded into [0, pi).
double folded_angle(const BlochVector& u) {
  double a = std::atan2(u.y(), u.x());
  while (a < 0) a += std::numbers::pi;
  while (a >= std::numbers::pi) a -= std::numbers::pi;
  return a;
}
}  // namespace

TEST_CASE("entropy at reference points") {
  CHECK(entropy_at(BlochVector(0, 0, 1), make_hs_povm("digon")) == doctest::Approx(0.0));
  CHECK(relative_entropy_at(BlochVector(0, 0, 1), make_hs_povm("digon")) == doctest::Approx(kLn2).epsilon(1e-15));

  const HsPovm tetra = make_hs_povm("tetrahedron");
  CHECK(entropy_at(-tetra.fiducial(), tetra) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(entropy_at(tetra.fiducial(), tetra) == doctest::Approx(1.2424533248940002).epsilon(1e-14));

  CHECK(entropy_at(BlochVector::normalized(Eigen::Vector3d(1, 1, 1)), make_hs_povm("octahedron")) ==
        doctest::Approx(1.6143190251316641).epsilon(1e-14));

  const HsPovm square = make_hs_povm(Family::ngon, 4);
  CHECK(relative_entropy_at(square.fiducial(), square) == doctest::Approx(0.5 * kLn2).epsilon(1e-14));
}

TEST_CASE("mixed states") {
  const HsPovm cube = make_hs_povm("cube");
  CHECK(entropy_at_point(Eigen::Vector3d::Zero(), cube) == doctest::Approx(std::log(8.0)).epsilon(1e-15));
  const auto p = outcome_probabilities(Eigen::Vector3d(0.1, 0.2, 0.3), cube);
  double s = 0;
  for (double x : p) s += x;
  CHECK(s == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(outcome_probabilities(Eigen::Vector3d(1, 1, 0), cube), DomainError);
}

TEST_CASE("group invariance of the entropy") {
  std::mt19937_64 rng(21);
  for (const char* name : kFamilies) {
    const HsPovm povm = make_hs_povm(name);
    const RotationGroup& g = *povm.group();
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Vector3d u = random_unit(rng);
      const BlochVector gu = BlochVector::normalized(g[pick(rng)] * u);
      worst = std::max(worst, std::abs(entropy_at(gu, povm) - entropy_at(BlochVector(u), povm)));
    }
    CAPTURE(name);
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("entropy bounds and concavity") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const char* name : kFamilies) {
    const HsPovm povm = make_hs_povm(name);
    const double k = povm.size();
    bool bounded = true, concave = true;
    for (int i = 0; i < 1000; ++i) {
      const double hu = entropy_at(BlochVector(random_unit(rng)), povm);
      bounded = bounded && hu >= std::log(k / 2) - 1e-12 && hu <= std::log(k) + 1e-12;

      const Eigen::Vector3d a = random_unit(rng) * std::cbrt(unit(rng));
      const Eigen::Vector3d b = random_unit(rng) * std::cbrt(unit(rng));
      const double lambda = unit(rng);
      const double mixed = entropy_at_point(lambda * a + (1 - lambda) * b, povm);
      concave = concave && mixed >= lambda * entropy_at_point(a, povm) + (1 - lambda) * entropy_at_point(b, povm) - 1e-12;
    }
    CAPTURE(name);
    CHECK(bounded);
    CHECK(concave);
  }
}

TEST_CASE("polygon entropy depends only on the in-plane projection") {
  std::mt19937_64 rng(29);
  for (int n : {3, 4, 7}) {
    const HsPovm povm = make_hs_povm(Family::ngon, n);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Eigen::Vector3d u = random_unit(rng);
      worst = std::max(worst, std::abs(entropy_at(BlochVector(u), povm) -
                                       entropy_at_point(Eigen::Vector3d(u.x(), u.y(), 0), povm)));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("Fibonacci lattice") {
  const auto pts = fibonacci_lattice(1000);
  REQUIRE(pts.size() == 1000);
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& p : pts) {
    CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-14));
    c += p;
  }
  CHECK(c.norm() / 1000 < 1e-3);
}

TEST_CASE("global minima lie on the antipodal orbit") {
  for (const char* name : {"tetrahedron", "cube", "5-gon"}) {
    const HsPovm povm = make_hs_povm(name);
    const auto minima = find_extrema(povm, ExtremumMode::min);
    CAPTURE(name);
    REQUIRE(static_cast<int>(minima.size()) == povm.size());
    const double expected = std::log(static_cast<double>(povm.size())) - informational_power(povm);
    for (const auto& m : minima) {
      CHECK(std::abs(m.value - expected) < 1e-9);
      CHECK(m.type_label == TypeLabel::I);
      double nearest = 10.0;
      for (const auto& v : povm.vectors()) nearest = std::min(nearest, angular_distance(m.location, -v));
      CHECK(nearest < 1e-6);
    }
  }
}

TEST_CASE("tetrahedron entropy peaks at its own vertices") {
  const auto maxima = find_extrema(make_hs_povm("tetrahedron"), ExtremumMode::max);
  REQUIRE_FALSE(maxima.empty());
  CHECK(std::abs(maxima.front().value - 1.2424533248940002) < 1e-9);
  CHECK(maxima.size() == 4);
}

TEST_CASE("inert point classification") {
  const HsPovm octa = make_hs_povm("octahedron");
  const auto antipode = classify_inert_point(BlochVector(0, 0, -1), octa);
  CHECK(antipode.type_label == TypeLabel::I);
  CHECK(antipode.kind == CriticalKind::min);

  // Cube on a 4-fold axis: s < 1, a local maximum (second differences about -0.12).
  const auto cube_axis = classify_inert_point(BlochVector(0, 0, 1), make_hs_povm("cube"));
  CHECK(cube_axis.type_label == TypeLabel::II);
  CHECK(cube_axis.classifier_statistic == doctest::Approx(0.7603459963009468).epsilon(1e-12));
  CHECK(cube_axis.kind == CriticalKind::max);

  // Icosahedron at a dodecahedron vertex: s < 1, again a maximum.
  const BlochVector x6 = BlochVector::normalized(Eigen::Vector3d(0, 1 / kTau, kTau));
  const auto icosa = classify_inert_point(x6, make_hs_povm("icosahedron"));
  CHECK(icosa.type_label == TypeLabel::II);
  CHECK(icosa.classifier_statistic == doctest::Approx(0.8969679544572033).epsilon(1e-12));
  CHECK(icosa.kind == CriticalKind::max);

  CHECK_THROWS_AS(classify_inert_point(BlochVector::normalized(Eigen::Vector3d(0.1, 0.2, 0.9)), octa), DomainError);
}

TEST_CASE("rectangle bifurcation threshold") {
  const double a = rectangle_bifurcation_threshold();
  CHECK(a == doctest::Approx(1.17056).epsilon(1e-5));
  CHECK(std::abs(rectangle_bifurcation_function(a)) < 1e-10);
  CHECK(rectangle_bifurcation_function(0.5) * rectangle_bifurcation_function(1.5) < 0);
}

TEST_CASE("rectangle minima on each side of the threshold") {
  SUBCASE("alpha below threshold: inert minima on the bisector") {
    const HsPovm rect = make_rectangle_povm(0.8);
    const auto minima = find_extrema(rect, ExtremumMode::min);
    REQUIRE(minima.size() == 2);
    for (const auto& m : minima) {
      CHECK(std::abs(m.value - 0.8594017002230891) < 1e-10);
      CHECK(std::abs(folded_angle(m.location) - 0.4) < 1e-6);
      CHECK(m.type_label == TypeLabel::III);
    }
  }
  SUBCASE("alpha above threshold: four non-inert minima") {
    const HsPovm rect = make_rectangle_povm(1.4);
    const auto minima = find_extrema(rect, ExtremumMode::min);
    REQUIRE(minima.size() == 4);
    for (const auto& m : minima) {
      CHECK(std::abs(m.value - 1.0300817726593865) < 1e-10);
      CHECK(m.type_label == TypeLabel::non_inert);
      const double a = folded_angle(m.location);
      CHECK(std::min(std::abs(a - 0.0712156632101582), std::abs(a - 1.3287843234792422)) < 1e-6);
    }
    const auto inert = classify_inert_point(BlochVector(std::cos(0.7), std::sin(0.7), 0), rect);
    CHECK(inert.kind == CriticalKind::saddle);
  }
}

TEST_CASE("landscape sampling") {
  const auto land = sample_landscape(make_hs_povm("octahedron"), 1000, false);
  REQUIRE(land.entropy.size() == 1000);
  for (double v : land.entropy) {
    CHECK(v >= std::log(3.0) - 1e-12);
    CHECK(v <= std::log(6.0) + 1e-12);
  }
}
