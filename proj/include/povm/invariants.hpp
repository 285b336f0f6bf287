#pragma once

// Primary invariant polynomials of the prismatic, tetrahedral, octahedral and
// icosahedral rotation groups in their canonical orientation, the squared
// icosahedral secondary invariant J15^2, and the icosahedral orbit map.

#include <optional>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "povm/bloch.hpp"

namespace povm {

enum class InvariantId { rho, gamma_n, z2, I2, I3, I4, I6, I6p, I10 };

/// "rho", "gamma_n" (or "gamma"), "z2", "I2", "I3", "I4", "I6", "I6'"
/// (or "I6p"), "I10".
std::optional<InvariantId> parse_invariant(const std::string& name);
std::string invariant_name(InvariantId id);

/// Polynomial value at x (x need not be unit). gamma_n needs n >= 1.
/// Throws std::invalid_argument for unknown names or a missing n.
double evaluate_invariant(InvariantId id, const Eigen::Vector3d& x, int n = 0);
double evaluate_invariant(const std::string& name, const Eigen::Vector3d& x, int n = 0);

// Generic forms, instantiated for double, QSqrt5 and Interval. `tau` is the
// golden ratio in the caller's number type.
template <class T>
T invariant_i6p(const T& x, const T& y, const T& z, const T& tau) {
  const T t2 = tau * tau;
  return (t2 * x * x - y * y) * (t2 * y * y - z * z) * (t2 * z * z - x * x);
}

template <class T>
T invariant_i10(const T& x, const T& y, const T& z, const T& tau) {
  const T t2 = tau * tau;
  const T it2 = T(1) / t2;
  return (x + y + z) * (x - y - z) * (y - z - x) * (z - y - x) * (it2 * x * x - t2 * y * y) *
         (it2 * y * y - t2 * z * z) * (it2 * z * z - t2 * x * x);
}

template <class T>
T j15_squared_generic(const T& t1, const T& t2, const T& tau) {
  const T t1_2 = t1 * t1;
  const T t1_3 = t1_2 * t1;
  const T t2_2 = t2 * t2;
  return T(4) * t1_2 - T(8) * (T(3) + T(4) * tau) * t1 * t2 - T(91) * (T(3) - T(2) * tau) * t1_3 +
         T(4) * (T(5) + T(8) * tau) * t2_2 + T(159) * (T(1) - T(2) * tau) * t1_2 * t2 +
         T(688) * (T(13) - T(8) * tau) * t1_3 * t1 + T(325) * (T(1) + T(2) * tau) * t1 * t2_2 -
         T(720) * (T(7) - T(4) * tau) * t1_3 * t2 - T(1728) * (T(55) - T(34) * tau) * t1_3 * t1_2 -
         T(25) * (T(11) + T(18) * tau) * t2_2 * t2;
}

/// (I6'(w), I10(w)).
std::pair<double, double> orbit_map_icosahedral(const BlochVector& w);

/// Squared secondary invariant J15^2 as a polynomial in (theta1, theta2).
double j15_squared(double theta1, double theta2);

/// Membership of (theta1, theta2) in the range of the icosahedral orbit map:
/// -(2 tau + 1)/5 <= theta1 <= (2 tau + 1)/27, (7 - 4 tau) theta1 <= theta2,
/// J15^2 >= 0, each at tolerance 1e-10.
bool range_membership_icosahedral(double theta1, double theta2);

}  // namespace povm
