#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "povm/catalog.hpp"
#include "povm/symmetry.hpp"

using namespace povm;

namespace {
const double kTau = (1 + std::sqrt(5.0)) / 2;

struct Table2Row {
  const char* family;
  int orbit, stabilizer, n_a, n_s;
  double n_v;
  int degree;
};

// Orbit size, stabilizer order, n_a, n_s, n(v) and degree bound per family.
const Table2Row kTable2[] = {
    {"6-gon", 6, 1, 4, 2, 4.0, 5},      {"8-gon", 8, 1, 6, 2, 5.0, 7},
    {"5-gon", 5, 1, 4, 1, 3.0, 4},      {"7-gon", 7, 1, 6, 1, 4.0, 6},
    {"tetrahedron", 4, 3, 0, 2, 2, 2},  {"octahedron", 6, 4, 0, 3, 3, 3},
    {"cube", 8, 3, 0, 4, 4, 5},         {"cuboctahedron", 12, 2, 4, 3, 5, 7},
    {"icosahedron", 12, 5, 0, 4, 4, 5}, {"dodecahedron", 20, 3, 4, 4, 6, 9},
    {"icosidodecahedron", 30, 2, 14, 2, 9, 15},
};
}  // namespace

TEST_CASE("group orders and closure") {
  CHECK(generate_group(GroupKind::octahedral).order() == 24);
  CHECK(generate_group(GroupKind::icosahedral).order() == 60);
  CHECK(generate_group(GroupKind::tetrahedral).order() == 12);
  CHECK(generate_group(GroupKind::cyclic, 5).order() == 5);
  CHECK(generate_group("D_3").order() == 6);
  CHECK_THROWS_AS(generate_group("X"), std::invalid_argument);

  for (const char* tag : {"T", "O", "I", "C_7"}) {
    const RotationGroup g = generate_group(tag);
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK((g[i].transpose() * g[i] - Eigen::Matrix3d::Identity()).norm() < 1e-10);
      CHECK(g[i].determinant() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(g.find(g[i].transpose()).has_value());
      for (std::size_t j = 0; j < g.order(); ++j) CHECK(g.find(g[i] * g[j]).has_value());
    }
  }
}

TEST_CASE("cyclic group rotates about z") {
  const RotationGroup c5 = generate_group(GroupKind::cyclic, 5);
  for (const auto& m : c5.elements()) CHECK((m * Eigen::Vector3d::UnitZ() - Eigen::Vector3d::UnitZ()).norm() < 1e-12);
}

TEST_CASE("orbits and stabilizers of the canonical seeds") {
  const RotationGroup o = generate_group(GroupKind::octahedral);
  const RotationGroup i = generate_group(GroupKind::icosahedral);
  const BlochVector icosa = BlochVector::normalized(Eigen::Vector3d(0, kTau, 1));
  CHECK(orbit(o, BlochVector(0, 0, 1)).size() == 6);
  CHECK(orbit(o, BlochVector::normalized(Eigen::Vector3d(1, 1, 1))).size() == 8);
  CHECK(orbit(i, icosa).size() == 12);
  CHECK(stabilizer(o, BlochVector(0, 0, 1)).order() == 4);
  CHECK(stabilizer(i, icosa).order() == 5);
  CHECK(stabilizer(generate_group(GroupKind::cyclic, 6), BlochVector(1, 0, 0)).order() == 1);
}

TEST_CASE("orbit ordering is deterministic") {
  const RotationGroup o = generate_group(GroupKind::octahedral);
  const auto a = orbit(o, BlochVector(0, 0, 1));
  const auto b = orbit(o, BlochVector(0, 0, 1));
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK((a[k].vec() - b[k].vec()).norm() == 0.0);
}

TEST_CASE("orbit-stabilizer and zero centroid for every family") {
  for (const auto& row : kTable2) {
    const HsPovm povm = make_hs_povm(row.family);
    const RotationGroup& g = *povm.group();
    const auto orb = orbit(g, povm.fiducial());
    const auto stab = stabilizer(g, povm.fiducial());
    CAPTURE(row.family);
    CHECK(orb.size() * stab.order() == g.order());
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& u : orb) c += u.vec();
    CHECK(c.norm() < 1e-12);
  }
}

TEST_CASE("double coset profiles reproduce the degree-bound table") {
  for (const auto& row : kTable2) {
    const HsPovm povm = make_hs_povm(row.family);
    const RotationGroup& g = *povm.group();
    const auto profile = double_coset_profile(g, povm.fiducial());
    CAPTURE(row.family);
    CHECK(static_cast<int>(orbit(g, povm.fiducial()).size()) == row.orbit);
    CHECK(static_cast<int>(stabilizer(g, povm.fiducial()).order()) == row.stabilizer);
    CHECK(profile.n_a == row.n_a);
    CHECK(profile.n_s == row.n_s);
    // Odd polygons: the table prints n/2 + 1/2 for the count of distinct nodes.
    CHECK(profile.n_v == doctest::Approx(row.n_v));
    CHECK(degree_bound(profile, row.orbit, row.stabilizer) == row.degree);
    CHECK(profile.strict_n_s + profile.strict_n_a == profile.n_s + profile.n_a);

    const std::size_t total = std::accumulate(profile.coset_sizes.begin(), profile.coset_sizes.end(), std::size_t{0});
    CHECK(total == g.order());
    for (std::size_t size : profile.coset_sizes) {
      const std::size_t k = row.stabilizer;
      CHECK((size == k || size == k * k));
    }
  }
}

TEST_CASE("antipodal flag") {
  CHECK(double_coset_profile(generate_group("O"), BlochVector(0, 0, 1)).antipodal_in_orbit);
  const HsPovm tetra = make_hs_povm("tetrahedron");
  CHECK_FALSE(double_coset_profile(*tetra.group(), tetra.fiducial()).antipodal_in_orbit);
}

TEST_CASE("symmetry group of a point set") {
  const HsPovm cube = make_hs_povm("cube");
  CHECK(rotation_symmetry_group(cube.vectors()).order() == 24);
  const HsPovm rect = make_rectangle_povm(0.8);
  CHECK(rotation_symmetry_group(rect.vectors()).order() == 4);  // D_2
}

TEST_CASE("axis rotation follows the right-hand rule") {
  const Eigen::Matrix3d r = axis_rotation(Eigen::Vector3d::UnitZ(), std::numbers::pi / 2);
  CHECK((r * Eigen::Vector3d::UnitX() - Eigen::Vector3d::UnitY()).norm() < 1e-15);
}
