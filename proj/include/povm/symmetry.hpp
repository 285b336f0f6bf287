#pragma once

// Finite rotation groups acting on S^2: closure from generators, orbits,
// stabilizers, and double-coset statistics of point stabilizers.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "povm/bloch.hpp"

namespace povm {

enum class GroupKind { cyclic, dihedral, tetrahedral, octahedral, icosahedral, other };

/// Finite subgroup of SO(3) stored as an explicit element list.
///
/// Canonical orientations: C_n about z; D_n with its 2-fold axes including x;
/// T with 3-fold axes through (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1);
/// O with the coordinate axes as 4-fold axes; I with 5-fold axes through the
/// icosahedron vertices (0, +-tau, +-1) and cyclic permutations.
class RotationGroup {
 public:
  static constexpr double kMatrixTolerance = 1e-8;

  RotationGroup(GroupKind kind, int n, std::vector<Eigen::Matrix3d> elements);

  GroupKind kind() const { return kind_; }
  /// n for C_n / D_n, 0 otherwise.
  int n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Eigen::Matrix3d>& elements() const { return elements_; }
  const Eigen::Matrix3d& operator[](std::size_t i) const { return elements_[i]; }
  /// "C_5", "D_4", "T", "O", "I", or "G_<order>".
  std::string name() const;

  /// Index of the element equal to m within kMatrixTolerance.
  std::optional<std::size_t> find(const Eigen::Matrix3d& m) const;
  std::size_t identity_index() const;
  std::size_t inverse_index(std::size_t i) const;
  std::size_t product_index(std::size_t i, std::size_t j) const;

 private:
  GroupKind kind_;
  int n_;
  std::vector<Eigen::Matrix3d> elements_;
};

/// Rotation by `angle` about `axis` (right-hand rule).
Eigen::Matrix3d axis_rotation(const Eigen::Vector3d& axis, double angle);

/// Builds C_n (n >= 1), D_n (n >= 2), T, O or I in canonical orientation.
/// Throws std::invalid_argument for unknown tags and std::logic_error when the
/// closure does not have the expected order.
RotationGroup generate_group(GroupKind kind, int n = 0);
/// Parses "C_5", "C5", "D_3", "T", "O", "I".
RotationGroup generate_group(const std::string& tag);

/// C_n about an arbitrary axis.
RotationGroup cyclic_group(int n, const Eigen::Vector3d& axis);

/// Closure of a generator set; throws std::logic_error above max_order.
std::vector<Eigen::Matrix3d> close_under_product(std::span<const Eigen::Matrix3d> generators,
                                                 std::size_t max_order);

/// Orbit deduplicated at 1e-8, sorted lexicographically on coordinates
/// rounded to 8 decimals.
std::vector<BlochVector> orbit(const RotationGroup& g, const BlochVector& v);

/// Subgroup fixing v (within 1e-8); tagged as cyclic.
RotationGroup stabilizer(const RotationGroup& g, const BlochVector& v);

/// Double cosets K_v g K_v of the stabilizer of v.
///
/// Two double cosets give the same interpolation node when they are mutually
/// inverse or, more generally, when they share the value gv.v. n_s / n_a count
/// cosets by that pairing: a coset alone at its value of gv.v is counted in
/// n_s, cosets sharing a value are counted in n_a, so n_v equals the number
/// of distinct nodes. strict_n_s / strict_n_a use the bare group-theoretic
/// test K_v g K_v == K_v g^-1 K_v, which can only give a weaker bound.
struct DoubleCosetProfile {
  int n_s = 0;
  int n_a = 0;
  double n_v = 0.0;  ///< n_s + n_a / 2
  int strict_n_s = 0;
  int strict_n_a = 0;
  bool antipodal_in_orbit = false;
  std::vector<std::size_t> coset_sizes;
};

DoubleCosetProfile double_coset_profile(const RotationGroup& g, const BlochVector& v);

/// Upper bound on the degree of the Hermite interpolant:
/// (|Kv| - 2)/|K_v| + n_s - 1 if -v in Kv, (|Kv| - 1)/|K_v| + n_s - 1 otherwise.
int degree_bound(const DoubleCosetProfile& profile, int orbit_size, int stabilizer_order);

/// All proper rotations mapping a finite point set onto itself. Requires the
/// set to span at least a plane (a collinear set has an infinite group).
RotationGroup rotation_symmetry_group(std::span<const BlochVector> points);

/// Whether `v` is within `tol` of some element of `points`.
bool contains_point(std::span<const BlochVector> points, const Eigen::Vector3d& v, double tol = 1e-8);

/// Entries snapped to {0, +-1, +-1/2, +-tau/2, +-1/(2 tau)} when within 1e-9.
Eigen::Matrix3d snap_algebraic(const Eigen::Matrix3d& m);

}  // namespace povm
