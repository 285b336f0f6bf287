#pragma once

// Normalized rank-1 qubit POVMs given by their Bloch vectors: the nine highly
// symmetric families, the rectangle family, user-supplied sets, and
// frame/design diagnostics.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "povm/bloch.hpp"
#include "povm/symmetry.hpp"

namespace povm {

enum class Family {
  digon,
  ngon,
  tetrahedron,
  octahedron,
  cube,
  cuboctahedron,
  icosahedron,
  dodecahedron,
  icosidodecahedron,
  custom,
  rectangle,
};

/// Ordered set of k unit Bloch vectors with zero centroid. The first vector is
/// the fiducial; for named families the rest is its orbit under `group()`.
class HsPovm {
 public:
  /// Custom POVM; throws DomainError if the centroid exceeds 1e-10.
  static HsPovm custom(std::vector<BlochVector> vectors);

  const std::vector<BlochVector>& vectors() const { return vectors_; }
  const BlochVector& fiducial() const { return vectors_.front(); }
  int size() const { return static_cast<int>(vectors_.size()); }
  Family family() const { return family_; }
  /// Polygon order for n-gons (2 for the digon), 0 otherwise.
  int n() const { return n_; }
  /// Rectangle angle, 0 otherwise.
  double alpha() const { return alpha_; }
  bool is_named() const { return family_ != Family::custom && family_ != Family::rectangle; }
  /// "cube", "5-gon", "rectangle(0.8)", ...
  std::string name() const;
  /// Transitive rotation group: canonical group for named families, brute-force
  /// symmetry group otherwise (nullptr when the set is not symmetric).
  std::shared_ptr<const RotationGroup> group() const { return group_; }
  std::string group_tag() const { return group_ ? group_->name() : std::string{}; }

 private:
  friend HsPovm make_hs_povm(Family, int);
  friend HsPovm make_rectangle_povm(double);
  HsPovm(std::vector<BlochVector> v, Family f, int n, double alpha, std::shared_ptr<const RotationGroup> g);

  std::vector<BlochVector> vectors_;
  Family family_;
  int n_ = 0;
  double alpha_ = 0.0;
  std::shared_ptr<const RotationGroup> group_;
};

/// Named HS family in canonical orientation. `n` is the polygon order for
/// Family::ngon (n >= 2; n = 2 gives the digon). Throws std::invalid_argument.
HsPovm make_hs_povm(Family family, int n = 0);
/// Accepts "cube", "icosidodecahedron", "digon", "ngon:7", "7-gon".
HsPovm make_hs_povm(const std::string& name);
std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family f);
/// The nine families used for the informational-power table (n-gons excluded).
std::vector<Family> hs_families();

/// {v1, -v1, v2, -v2} in the z = 0 plane with angle alpha between v1 and v2.
/// alpha = pi/2 returns the square (4-gon). Throws DomainError outside (0, pi).
HsPovm make_rectangle_povm(double alpha);

/// Symmetry group of an arbitrary POVM if it acts transitively, else nullptr.
std::shared_ptr<const RotationGroup> transitive_symmetry_group(std::span<const BlochVector> vectors);

struct DesignReport {
  bool is_povm = false;
  bool informationally_complete = false;
  int design_order = 0;
  /// (s, max |moment - sphere average| over sampled directions), s = 1..5.
  std::vector<std::pair<int, double>> moment_values;
  double centroid_norm = 0.0;
};

inline constexpr std::uint64_t kDesignSeed = 42;
inline constexpr int kDesignDirections = 200;

DesignReport validate_povm(std::span<const BlochVector> vectors);

/// Largest t <= t_max with matching moments up to degree t (0 if even the
/// first moment fails).
int spherical_design_order(std::span<const BlochVector> vectors, int t_max = 5,
                           std::uint64_t seed = kDesignSeed);

/// Sorted distinct values of -v.u over the POVM vectors u (v = fiducial).
std::vector<double> interpolation_set(const HsPovm& povm);

/// JSON: {"schema_version": 1, "family": "...", "vectors": [[x,y,z], ...]}.
std::string povm_to_json(const HsPovm& povm);
/// Reads vectors; a named family tag is honoured only if the vectors coincide
/// with the canonical set, otherwise the POVM is custom.
HsPovm povm_from_json(const std::string& text);
HsPovm load_povm(const std::string& path);

}  // namespace povm
