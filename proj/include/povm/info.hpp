#pragma once

// Informational power, the measurement-independent average relative
// entropy, and entropic uncertainty bounds for qubit POVMs.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "povm/catalog.hpp"

namespace povm {

/// W = ln 2 - (2/k) sum_j eta((1 - v_j.v)/2) for the named families, whose
/// minimum sits on the antipodal orbit. For other POVMs with a transitive
/// symmetry group W = ln k - min H, with the minimum found numerically.
/// Throws DomainError for POVMs without a transitive symmetry group.
double informational_power(const HsPovm& povm);

/// ln 2 - (2/n) sum_{j=1}^n eta(sin^2(pi j / n)), n >= 2.
double ngon_informational_power(int n);

/// ln d - sum_{j=2}^d 1/j, d >= 2.
double average_relative_entropy(int d);

/// ln 2 + ln max_{j,l} |cos(theta_jl)|, theta_jl half the angle between
/// x_j of the first set and x_l of the second.
double uncertainty_upper_bound(std::span<const BlochVector> first, std::span<const BlochVector> second);
double uncertainty_upper_bound(const HsPovm& first, const HsPovm& second);
/// General dimension: ln d + (1/2) ln((1 - 1/d) max cos(2 theta) + 1/d),
/// given the largest cosine of the Bloch angle between the two sets.
double uncertainty_upper_bound(int d, double max_cos_angle);

/// (ln(k/2), ln k).
std::pair<double, double> entropy_bounds(const HsPovm& povm);

struct InfoPowerReport {
  std::string family;
  double W = 0.0;
  double H_min = 0.0;
  /// Sphere average of ln k - H over a quasi-random lattice.
  double average_relative_entropy = 0.0;
  /// For rectangles and the square, the bound from their two PVM halves.
  std::optional<double> uncertainty_bound;
};

InfoPowerReport info_power_report(const HsPovm& povm, std::size_t samples = 100000, unsigned threads = 0);

struct Table5Row {
  std::string name;
  double computed = 0.0;
  double printed = 0.0;
};

/// The informational-power table: digon, the n-gon limit, the seven
/// polyhedra and the average row.
std::vector<Table5Row> informational_power_table();

}  // namespace povm
