#include <cmath>
#include <numbers>

#include "doctest.h"
#include "povm/catalog.hpp"
#include "povm/dynamics.hpp"
#include "povm/entropy.hpp"
#include "povm/errors.hpp"

using namespace povm;

namespace {
const char* const kFamilies[] = {"digon",        "5-gon",       "tetrahedron",  "octahedron",       "cube",
                                 "cuboctahedron", "icosahedron", "dodecahedron", "icosidodecahedron"};

std::vector<std::vector<int>> all_sequences(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(n, 1);
  while (true) {
    out.push_back(s);
    int i = n - 1;
    while (i >= 0 && s[i] == k) s[i--] = 1;
    if (i < 0) break;
    ++s[i];
  }
  return out;
}
}  // namespace

TEST_CASE("rotation validation") {
  CHECK_THROWS_AS(UnitaryAsRotation(Eigen::Matrix3d::Identity() * 2), DomainError);
  CHECK_THROWS_AS(UnitaryAsRotation(-Eigen::Matrix3d::Identity()), DomainError);
  const auto r = UnitaryAsRotation::axis_angle(Eigen::Vector3d::UnitZ(), 0.3);
  CHECK((r.matrix() * r.inverse().matrix() - Eigen::Matrix3d::Identity()).norm() < 1e-15);
}

TEST_CASE("transition matrices") {
  const Eigen::MatrixXd digon = transition_matrix(UnitaryAsRotation::identity(), make_hs_povm("digon"));
  CHECK((digon - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-15);

  const Eigen::MatrixXd tetra = transition_matrix(UnitaryAsRotation::identity(), make_hs_povm("tetrahedron"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(tetra(i, j) == doctest::Approx(i == j ? 0.5 : 1.0 / 6).epsilon(1e-14));

  const auto r = UnitaryAsRotation::axis_angle(Eigen::Vector3d(1, 2, 2), 0.7);
  for (const char* name : kFamilies) {
    const Eigen::MatrixXd p = transition_matrix(r, make_hs_povm(name));
    CAPTURE(name);
    CHECK((p.rowwise().sum().array() - 1).abs().maxCoeff() < 1e-12);
    CHECK((p.colwise().sum().array() - 1).abs().maxCoeff() < 1e-12);
    CHECK(p.minCoeff() >= -1e-15);
  }
}

TEST_CASE("dynamical entropy reference values") {
  CHECK(dynamical_entropy(UnitaryAsRotation::identity(), make_hs_povm("digon")) == 0.0);
  CHECK(dynamical_entropy(UnitaryAsRotation::axis_angle(Eigen::Vector3d::UnitZ(), std::numbers::pi / 2),
                          make_hs_povm("digon")) == doctest::Approx(0.0));
  CHECK(dynamical_entropy(UnitaryAsRotation::axis_angle(Eigen::Vector3d::UnitZ(), std::numbers::pi / 4),
                          make_hs_povm("cube")) == doctest::Approx(1.8880100341060468).epsilon(1e-13));
  CHECK(measurement_entropy(make_hs_povm("digon")) == 0.0);
  CHECK(measurement_entropy(make_hs_povm("tetrahedron")) == doctest::Approx(1.2424533248940002).epsilon(1e-14));
}

TEST_CASE("identity rotation gives the measurement entropy") {
  for (const char* name : kFamilies) {
    const HsPovm povm = make_hs_povm(name);
    CAPTURE(name);
    CHECK(std::abs(dynamical_entropy(UnitaryAsRotation::identity(), povm) - measurement_entropy(povm)) < 1e-12);
    CHECK(std::abs(measurement_entropy(povm) - entropy_at(povm.fiducial(), povm)) < 1e-12);
  }
}

TEST_CASE("a rotation and its inverse have the same entropy rate") {
  const auto r = UnitaryAsRotation::axis_angle(Eigen::Vector3d(0.3, -1, 2), 1.1);
  for (const char* name : kFamilies) {
    const HsPovm povm = make_hs_povm(name);
    CHECK(dynamical_entropy(r, povm) == doctest::Approx(dynamical_entropy(r.inverse(), povm)).epsilon(1e-12));
  }
}

TEST_CASE("sequence probabilities") {
  const HsPovm digon = make_hs_povm("digon");
  const auto id = UnitaryAsRotation::identity();
  CHECK(sequence_probability(Eigen::Vector3d(0, 0, 1), id, digon, {1, 1, 1}) == doctest::Approx(1.0));
  CHECK(sequence_probability(Eigen::Vector3d(0, 0, 1), id, digon, {1, 2}) == 0.0);

  const HsPovm cube = make_hs_povm("cube");
  for (int i = 1; i <= 8; ++i) CHECK(sequence_probability(Eigen::Vector3d::Zero(), id, cube, {i}) == doctest::Approx(1.0 / 8));

  const auto r = UnitaryAsRotation::axis_angle(Eigen::Vector3d(1, 1, 0), 0.4);
  const HsPovm tetra = make_hs_povm("tetrahedron");
  double total = 0.0;
  for (const auto& s : all_sequences(4, 3)) total += sequence_probability(Eigen::Vector3d(0.2, -0.1, 0.5), r, tetra, s);
  CHECK(std::abs(total - 1) < 1e-12);

  CHECK_THROWS_AS(sequence_probability(Eigen::Vector3d(0, 0, 2), id, digon, {1}), DomainError);
  CHECK_THROWS_AS(sequence_probability(Eigen::Vector3d::Zero(), id, digon, {3}), DomainError);
  CHECK_THROWS_AS(sequence_probability(Eigen::Vector3d::Zero(), id, digon, {0}), DomainError);
}

TEST_CASE("enumerated entropy rate equals the closed form") {
  const auto r = UnitaryAsRotation::axis_angle(Eigen::Vector3d(1, 2, 3), 0.9);
  for (const char* name : {"digon", "tetrahedron", "octahedron", "cube"}) {
    const HsPovm povm = make_hs_povm(name);
    for (int n = 1; n <= 4; ++n) {
      if (std::pow(povm.size(), n + 1) > kEnumerationBudget) continue;
      CAPTURE(name);
      CAPTURE(n);
      CHECK(std::abs(empirical_entropy_rate(r, povm, n) - dynamical_entropy(r, povm)) < 1e-12);
    }
  }
  CHECK(empirical_entropy_rate(UnitaryAsRotation::identity(), make_hs_povm("digon"), 4) == doctest::Approx(0.0));
  CHECK_THROWS_AS(empirical_entropy_rate(r, make_hs_povm("icosidodecahedron"), 4), DomainError);
  CHECK_THROWS_AS(empirical_entropy_rate(r, make_hs_povm("cube"), 0), DomainError);
}

TEST_CASE("sequence entropy of the first outcome") {
  const HsPovm cube = make_hs_povm("cube");
  CHECK(sequence_entropy(UnitaryAsRotation::identity(), cube, 1) == doctest::Approx(std::log(8.0)).epsilon(1e-14));
}
