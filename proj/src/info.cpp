#include "povm/info.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "povm/entropy.hpp"
#include "povm/errors.hpp"

namespace povm {

double informational_power(const HsPovm& povm) {
  if (povm.is_named()) {
    const auto& v = povm.fiducial();
    double s = 0.0;
    for (const auto& u : povm.vectors()) s += eta(std::clamp((1.0 - u.dot(v)) / 2.0, 0.0, 1.0));
    return std::log(2.0) - 2.0 / povm.size() * s;
  }
  if (!povm.group())
    throw DomainError("informational_power: POVM has no transitive symmetry group; use the numeric minimum of H instead");
  const auto ex = find_extrema(povm, ExtremumMode::min);
  return std::log(static_cast<double>(povm.size())) - ex.front().value;
}

double ngon_informational_power(int n) {
  if (n < 2) throw std::invalid_argument("ngon_informational_power: n must be at least 2");
  long double s = 0.0L;
  for (int j = 1; j <= n; ++j) {
    const long double x = std::sin(std::numbers::pi_v<long double> * j / n);
    s += eta_ld(x * x);
  }
  return static_cast<double>(std::log(2.0L) - 2.0L / n * s);
}

double average_relative_entropy(int d) {
  if (d < 2) throw std::invalid_argument("average_relative_entropy: d must be at least 2");
  long double s = 0.0L;
  for (int j = 2; j <= d; ++j) s += 1.0L / j;
  return static_cast<double>(std::log(static_cast<long double>(d)) - s);
}

double uncertainty_upper_bound(std::span<const BlochVector> first, std::span<const BlochVector> second) {
  double best = 0.0;
  for (const auto& a : first)
    for (const auto& b : second) {
      // cos of half the Bloch angle: sqrt((1 + a.b)/2)
      best = std::max(best, std::sqrt(std::max(0.0, (1.0 + a.dot(b)) / 2.0)));
    }
  return std::log(2.0) + std::log(best);
}

double uncertainty_upper_bound(const HsPovm& first, const HsPovm& second) {
  return uncertainty_upper_bound(std::span<const BlochVector>(first.vectors()),
                                 std::span<const BlochVector>(second.vectors()));
}

double uncertainty_upper_bound(int d, double max_cos_angle) {
  if (d < 2) throw std::invalid_argument("uncertainty_upper_bound: d must be at least 2");
  const double inv = 1.0 / d;
  return std::log(static_cast<double>(d)) + 0.5 * std::log((1.0 - inv) * max_cos_angle + inv);
}

std::pair<double, double> entropy_bounds(const HsPovm& povm) {
  const double k = povm.size();
  return {std::log(k / 2.0), std::log(k)};
}

InfoPowerReport info_power_report(const HsPovm& povm, std::size_t samples, unsigned threads) {
  InfoPowerReport r;
  r.family = povm.name();
  r.W = informational_power(povm);
  r.H_min = std::log(static_cast<double>(povm.size())) - r.W;
  r.average_relative_entropy = sphere_average_relative_entropy(povm, samples, threads);
  const bool two_pvms = povm.family() == Family::rectangle || (povm.family() == Family::ngon && povm.n() == 4);
  if (two_pvms) {
    // Rectangles list {v1, -v1, v2, -v2}; the square lists its vertices in cyclic order.
    const auto& v = povm.vectors();
    std::vector<BlochVector> a, b;
    if (povm.family() == Family::rectangle) {
      a = {v[0], v[1]};
      b = {v[2], v[3]};
    } else {
      a = {v[0], v[2]};
      b = {v[1], v[3]};
    }
    r.uncertainty_bound = uncertainty_upper_bound(std::span<const BlochVector>(a), std::span<const BlochVector>(b));
  }
  return r;
}

std::vector<Table5Row> informational_power_table() {
  std::vector<Table5Row> rows;
  rows.push_back({"digon", informational_power(make_hs_povm(Family::digon)), 0.69315});
  rows.push_back({"regular n-gon (n -> infinity)", ngon_informational_power(1000000), 0.30685});
  const std::pair<Family, double> poly[] = {
      {Family::tetrahedron, 0.28768},   {Family::octahedron, 0.23105},   {Family::cube, 0.21576},
      {Family::cuboctahedron, 0.20273}, {Family::icosahedron, 0.20189},  {Family::dodecahedron, 0.19686},
      {Family::icosidodecahedron, 0.19486},
  };
  for (const auto& [f, printed] : poly) rows.push_back({family_name(f), informational_power(make_hs_povm(f)), printed});
  rows.push_back({"average value of relative entropy", average_relative_entropy(2), 0.19315});
  return rows;
}

}  // namespace povm
