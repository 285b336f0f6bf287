#pragma once

// Entropy of measurement on the Bloch sphere: evaluation, sampling, global
// minimization/maximization and classification of critical points.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "povm/bloch.hpp"
#include "povm/catalog.hpp"

namespace povm {

/// H_B(u) = ln(k/2) + (2/k) sum_j h(u.v_j) for Shannon; Renyi/Tsallis apply
/// their generalized form to the outcome distribution.
double entropy_at(const BlochVector& u, const HsPovm& povm, const EntropyKernel& kernel = EntropyKernel::shannon());
/// ln k - H_B(u), in [0, ln 2].
double relative_entropy_at(const BlochVector& u, const HsPovm& povm);

/// Outcome distribution for a (possibly mixed) state with Bloch point u,
/// |u| <= 1. Throws DomainError outside the ball.
std::vector<double> outcome_probabilities(const Eigen::Vector3d& u, const HsPovm& povm);
/// Entropy of a mixed state given by its Bloch point (|u| <= 1).
double entropy_at_point(const Eigen::Vector3d& u, const HsPovm& povm,
                        const EntropyKernel& kernel = EntropyKernel::shannon());

/// n nearly uniform points on S^2 (golden-angle spiral).
std::vector<Eigen::Vector3d> fibonacci_lattice(std::size_t n);

/// Mean of the relative entropy over an n-point Fibonacci lattice.
double sphere_average_relative_entropy(const HsPovm& povm, std::size_t n, unsigned threads = 0);

enum class ExtremumMode { min, max };
enum class CriticalKind { min, max, saddle, degenerate };
enum class TypeLabel { I, II, III, non_inert };

std::string to_string(CriticalKind k);
std::string to_string(TypeLabel t);

struct CriticalPoint {
  BlochVector location{0, 0, 1};
  double value = 0.0;
  CriticalKind kind = CriticalKind::min;
  TypeLabel type_label = TypeLabel::non_inert;
  /// Local-extremum statistic s for inert points of type II/III; NaN otherwise.
  double classifier_statistic = 0.0;
  /// False when the local refinement hit its iteration budget.
  bool converged = true;
};

struct ExtremaOptions {
  std::size_t grid = 200000;
  /// Refinement stops once the simplex spread in H is below this.
  double ftol = 1e-10;
  /// Refined points closer than this (radians) are merged.
  double cluster_radius = 1e-4;
  /// Points within this of the best value are reported as global extrema.
  double value_tolerance = 1e-9;
  unsigned threads = 0;
};

/// Global minimizers or maximizers of H_B. Coplanar POVMs are searched on
/// the great circle of their plane in min mode.
std::vector<CriticalPoint> find_extrema(const HsPovm& povm, ExtremumMode mode, const ExtremaOptions& opts = {});

/// Classifies a point on a rotation axis of the POVM's symmetry group:
/// type I (antipodal to a POVM vector) is a local minimum; otherwise
/// s = (2/|Gu|) sum_{w in Gu} (w.v) ln(1 + w.v) decides min (s > 1) or max
/// (s < 1) when the stabilizer has order >= 3 (type II); order-2 axes
/// (type III) are probed by second differences along 8 geodesics.
/// Throws DomainError when u is not on an axis or the POVM is not symmetric.
CriticalPoint classify_inert_point(const BlochVector& u, const HsPovm& povm);

/// Root of cos(a/2) ln(tan^2(a/4)) + 2 on (0, pi/2), by bisection.
double rectangle_bifurcation_threshold();
double rectangle_bifurcation_function(double alpha);

struct EntropyLandscape {
  HsPovm povm;
  std::vector<Eigen::Vector3d> points;
  std::vector<double> entropy;
  std::vector<CriticalPoint> extrema;
};

/// Samples H_B on an n-point lattice and locates the global minima.
EntropyLandscape sample_landscape(const HsPovm& povm, std::size_t n, bool with_extrema = true, unsigned threads = 0);

}  // namespace povm
