#pragma once

// Qubit states on the Bloch sphere and the entropy kernels evaluated on
// outcome probabilities.

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace povm {

/// Pure qubit state: a unit vector in R^3.
///
/// Construction renormalizes inputs whose norm is within 1e-9 of one and
/// rejects anything further away; use `normalized()` for arbitrary nonzero
/// directions.
class BlochVector {
 public:
  static constexpr double kNormTolerance = 1e-9;

  BlochVector(double x, double y, double z);
  explicit BlochVector(const Eigen::Vector3d& v);

  /// Direction of `v` (throws DomainError for the zero vector).
  static BlochVector normalized(const Eigen::Vector3d& v);

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  const Eigen::Vector3d& vec() const { return v_; }

  double dot(const BlochVector& o) const { return v_.dot(o.v_); }
  BlochVector operator-() const;

 private:
  struct Trusted {};
  BlochVector(const Eigen::Vector3d& v, Trusted) : v_(v) {}
  Eigen::Vector3d v_;
};

/// Angular (great-arc) distance on the sphere, in radians.
double angular_distance(const BlochVector& a, const BlochVector& b);

/// Outcome distribution of a k-outcome measurement.
class ProbabilityVector {
 public:
  /// Validates p_i in [0, d/k + 1e-12] and sum = 1 within 1e-12.
  ProbabilityVector(std::vector<double> p, int d = 2);
  std::span<const double> values() const { return p_; }
  std::size_t size() const { return p_.size(); }

 private:
  std::vector<double> p_;
};

/// Entropy functional applied to an outcome distribution.
///
/// Shannon uses eta(x) = -x ln x. Tsallis(alpha) is the sum-form
/// (1 - sum p^alpha)/(alpha - 1); Renyi(alpha) is ln(sum p^alpha)/(1 - alpha),
/// a strictly increasing function of the Tsallis entropy with the same alpha,
/// so both share the same pointwise kernel for interpolation purposes.
class EntropyKernel {
 public:
  enum class Kind { shannon, renyi, tsallis };

  static EntropyKernel shannon() { return EntropyKernel(Kind::shannon, 1.0); }
  static EntropyKernel renyi(double alpha);
  static EntropyKernel tsallis(double alpha);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::string name() const;

  /// Pointwise summand phi(x): eta for Shannon, (x - x^alpha)/(alpha-1) otherwise.
  double phi(double x) const;
  /// n-th derivative of phi at x > 0 (n >= 1).
  double phi_derivative(double x, int order) const;
  long double phi_derivative_ld(long double x, int order) const;
  long double phi_ld(long double x) const;

  /// Entropy of a full distribution (generalized form for Renyi).
  double entropy(std::span<const double> p) const;

 private:
  EntropyKernel(Kind k, double a) : kind_(k), alpha_(a) {}
  Kind kind_;
  double alpha_;
};

/// p_j = ((d-1) u.v + 1)/k.
double probability(const BlochVector& u, const BlochVector& v, int d, int k);
double probability_from_dot(double dot, int d, int k);

/// eta(x) = -x ln x, eta(0) = 0; values in (-1e-12, 0) are clamped to 0.
double eta(double x);
long double eta_ld(long double x);

/// h(t) = eta(((d-1) t + 1)/d) on [-1/(d-1), 1].
double h(double t, int d = 2);

/// Exact n-th derivative of h (d = 2) for a given kernel.
/// Throws SingularityError at t = -1 for order >= 1.
double h_derivative(double t, int order, const EntropyKernel& kernel = EntropyKernel::shannon());
long double h_derivative_ld(long double t, int order, const EntropyKernel& kernel = EntropyKernel::shannon());
/// h for an arbitrary kernel, d = 2.
double h_kernel(double t, const EntropyKernel& kernel);
long double h_kernel_ld(long double t, const EntropyKernel& kernel);

/// arccos sqrt((1 + u.v)/2), in [0, pi/2].
double fubini_study_distance(const BlochVector& u, const BlochVector& v);

}  // namespace povm
