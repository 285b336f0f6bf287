#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "povm/catalog.hpp"
#include "povm/invariants.hpp"
#include "povm/symmetry.hpp"

using namespace povm;

namespace {
const double kTau = (1 + std::sqrt(5.0)) / 2;

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized();
}
}  // namespace

TEST_CASE("values at the special orbits") {
  const Eigen::Vector3d x2 = Eigen::Vector3d(0, 1, 1).normalized();
  const Eigen::Vector3d x3 = Eigen::Vector3d(1, 1, 1).normalized();
  const Eigen::Vector3d x5 = Eigen::Vector3d(0, kTau, 1).normalized();
  const Eigen::Vector3d x6 = Eigen::Vector3d(0, 1 / kTau, kTau).normalized();
  CHECK(evaluate_invariant("I4", x2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(evaluate_invariant("I6", x3) == doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(evaluate_invariant("I6'", x5) == doctest::Approx(-(2 + std::sqrt(5.0)) / 5).epsilon(1e-14));
  CHECK(evaluate_invariant("I6'", x6) == doctest::Approx((2 + std::sqrt(5.0)) / 27).epsilon(1e-14));
  const auto [t1, t2] = orbit_map_icosahedral(BlochVector(0, 0, 1));
  CHECK(t1 == 0.0);
  CHECK(t2 == 0.0);
  CHECK(orbit_map_icosahedral(BlochVector(x5)).first == doctest::Approx(-(2 + std::sqrt(5.0)) / 5).epsilon(1e-14));
  CHECK_THROWS_AS(evaluate_invariant("gamma_n", x2), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_invariant("I7", x2), std::invalid_argument);
}

TEST_CASE("invariance under the matching groups") {
  std::mt19937_64 rng(3);
  const std::pair<const char*, std::vector<const char*>> cases[] = {
      {"T", {"I2", "I3", "I4", "I6"}},
      {"O", {"I2", "I4", "I6"}},
      {"I", {"I2", "I6'", "I10"}},
  };
  for (const auto& [tag, names] : cases) {
    const RotationGroup g = generate_group(tag);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (const char* name : names) {
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) {
        const Eigen::Vector3d x = random_unit(rng);
        worst = std::max(worst, std::abs(evaluate_invariant(name, g[pick(rng)] * x) - evaluate_invariant(name, x)));
      }
      CAPTURE(tag);
      CAPTURE(name);
      CHECK(worst < 1e-10);
    }
  }
  const RotationGroup c7 = generate_group(GroupKind::cyclic, 7);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d x = random_unit(rng);
    const Eigen::Vector3d y = c7[i % 7] * x;
    CHECK(std::abs(evaluate_invariant("gamma_n", y, 7) - evaluate_invariant("gamma_n", x, 7)) < 1e-10);
    CHECK(std::abs(evaluate_invariant("rho", y) - evaluate_invariant("rho", x)) < 1e-10);
  }
}

TEST_CASE("I2 is one on the sphere and gamma_n is cos(n phi) on the equator") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    CHECK(std::abs(evaluate_invariant("I2", random_unit(rng)) - 1) < 1e-12);
    const double phi = 2 * std::numbers::pi * (i + 0.5) / 1000;
    const Eigen::Vector3d e(std::cos(phi), std::sin(phi), 0);
    CHECK(std::abs(evaluate_invariant("gamma_n", e, 5) - std::cos(5 * phi)) < 1e-12);
  }
}

TEST_CASE("I4 and I6 stay between their extreme orbit values") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20000; ++i) {
    const Eigen::Vector3d x = random_unit(rng);
    const double i4 = evaluate_invariant("I4", x), i6 = evaluate_invariant("I6", x);
    CHECK(i4 >= 1.0 / 3 - 1e-12);
    CHECK(i4 <= 1 + 1e-12);
    CHECK(i6 >= 1.0 / 9 - 1e-12);
    CHECK(i6 <= 1 + 1e-12);
  }
}

TEST_CASE("J15 squared on the orbit-map range") {
  CHECK(j15_squared(0, 0) == 0.0);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10000; ++i) {
    const auto [t1, t2] = orbit_map_icosahedral(BlochVector(random_unit(rng)));
    if (i < 1000) CHECK(j15_squared(t1, t2) >= -1e-10);
    CHECK(range_membership_icosahedral(t1, t2));
  }
  CHECK(range_membership_icosahedral(0, 0));
  CHECK_FALSE(range_membership_icosahedral((2 + std::sqrt(5.0)) / 27 + 0.01, 0));
}

TEST_CASE("J15 squared vanishes on mirror planes") {
  // The coordinate planes are mirror planes of the full icosahedral group.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (int i = 0; i < 200; ++i) {
    const double a = angle(rng);
    for (const Eigen::Vector3d& w : {Eigen::Vector3d(0, std::cos(a), std::sin(a)), Eigen::Vector3d(std::cos(a), 0, std::sin(a)),
                                     Eigen::Vector3d(std::cos(a), std::sin(a), 0)}) {
      const auto [t1, t2] = orbit_map_icosahedral(BlochVector(w));
      CHECK(std::abs(j15_squared(t1, t2)) < 1e-10);
    }
  }
}

TEST_CASE("generic forms agree with the double evaluators") {
  const Eigen::Vector3d x = Eigen::Vector3d(0.3, -0.5, 0.81).normalized();
  CHECK(invariant_i6p(x.x(), x.y(), x.z(), kTau) == doctest::Approx(evaluate_invariant("I6'", x)).epsilon(1e-14));
  CHECK(invariant_i10(x.x(), x.y(), x.z(), kTau) == doctest::Approx(evaluate_invariant("I10", x)).epsilon(1e-14));
  CHECK(j15_squared_generic(0.01, 0.02, kTau) == doctest::Approx(j15_squared(0.01, 0.02)).epsilon(1e-14));
}
