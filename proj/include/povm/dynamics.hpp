#pragma once

// Repeated measurement interleaved with a unitary: the induced Markov chain
// on outcomes, its entropy rate (dynamical entropy) and measurement entropy.

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "povm/catalog.hpp"

namespace povm {

/// Adjoint action of a qubit unitary on Bloch space.
class UnitaryAsRotation {
 public:
  static constexpr double kTolerance = 1e-10;

  /// Throws DomainError unless R is orthogonal with det +1 within 1e-10.
  explicit UnitaryAsRotation(const Eigen::Matrix3d& r);
  static UnitaryAsRotation identity() { return UnitaryAsRotation(Eigen::Matrix3d::Identity()); }
  static UnitaryAsRotation axis_angle(const Eigen::Vector3d& axis, double angle);

  const Eigen::Matrix3d& matrix() const { return r_; }
  UnitaryAsRotation inverse() const { return UnitaryAsRotation(r_.transpose()); }

 private:
  Eigen::Matrix3d r_;
};

/// p_ij = (1 + (R v_i).v_j)/k; doubly stochastic.
Eigen::MatrixXd transition_matrix(const UnitaryAsRotation& r, const HsPovm& povm);

/// (1/k) sum_{i,j} eta(p_ij).
double dynamical_entropy(const UnitaryAsRotation& r, const HsPovm& povm);

/// Mean entropy of measurement over the POVM's own states.
double measurement_entropy(const HsPovm& povm);

/// p_{i1}(rho) prod_m p_{i_m i_{m+1}} for 1-based outcome indices.
/// Throws DomainError for |rho| > 1 or indices outside [1, k].
double sequence_probability(const Eigen::Vector3d& rho, const UnitaryAsRotation& r, const HsPovm& povm,
                            const std::vector<int>& sequence);

inline constexpr double kEnumerationBudget = 1e7;

/// H_{n+1} - H_n from the maximally mixed state by exhaustive enumeration of
/// outcome sequences. Throws DomainError for n < 1 or k^(n+1) > 1e7.
double empirical_entropy_rate(const UnitaryAsRotation& r, const HsPovm& povm, int n);

/// Shannon entropy H_n of the length-n sequence distribution (same budget).
double sequence_entropy(const UnitaryAsRotation& r, const HsPovm& povm, int n);

}  // namespace povm
