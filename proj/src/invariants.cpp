#include "povm/invariants.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>

namespace povm {

namespace {
constexpr double kTau = std::numbers::phi;
constexpr double kRangeTolerance = 1e-10;
}  // namespace

std::optional<InvariantId> parse_invariant(const std::string& name) {
  static const std::map<std::string, InvariantId> names = {
      {"rho", InvariantId::rho}, {"gamma_n", InvariantId::gamma_n}, {"gamma", InvariantId::gamma_n},
      {"z2", InvariantId::z2},   {"I2", InvariantId::I2},           {"I3", InvariantId::I3},
      {"I4", InvariantId::I4},   {"I6", InvariantId::I6},           {"I6'", InvariantId::I6p},
      {"I6p", InvariantId::I6p}, {"I10", InvariantId::I10},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string invariant_name(InvariantId id) {
  switch (id) {
    case InvariantId::rho: return "rho";
    case InvariantId::gamma_n: return "gamma_n";
    case InvariantId::z2: return "z2";
    case InvariantId::I2: return "I2";
    case InvariantId::I3: return "I3";
    case InvariantId::I4: return "I4";
    case InvariantId::I6: return "I6";
    case InvariantId::I6p: return "I6'";
    case InvariantId::I10: return "I10";
  }
  return "?";
}

double evaluate_invariant(InvariantId id, const Eigen::Vector3d& v, int n) {
  const double x = v.x(), y = v.y(), z = v.z();
  switch (id) {
    case InvariantId::rho: return x * x + y * y;
    case InvariantId::gamma_n: {
      if (n < 1) throw std::invalid_argument("gamma_n requires n >= 1");
      return std::pow(std::complex<double>(x, y), n).real();
    }
    case InvariantId::z2: return z * z;
    case InvariantId::I2: return x * x + y * y + z * z;
    case InvariantId::I3: return x * y * z;
    case InvariantId::I4: return x * x * x * x + y * y * y * y + z * z * z * z;
    case InvariantId::I6: {
      const double x2 = x * x, y2 = y * y, z2 = z * z;
      return x2 * x2 * x2 + y2 * y2 * y2 + z2 * z2 * z2;
    }
    case InvariantId::I6p: return invariant_i6p(x, y, z, kTau);
    case InvariantId::I10: return invariant_i10(x, y, z, kTau);
  }
  throw std::invalid_argument("unknown invariant");
}

double evaluate_invariant(const std::string& name, const Eigen::Vector3d& x, int n) {
  auto id = parse_invariant(name);
  if (!id) throw std::invalid_argument("unknown invariant '" + name + "'");
  return evaluate_invariant(*id, x, n);
}

std::pair<double, double> orbit_map_icosahedral(const BlochVector& w) {
  return {invariant_i6p(w.x(), w.y(), w.z(), kTau), invariant_i10(w.x(), w.y(), w.z(), kTau)};
}

double j15_squared(double theta1, double theta2) { return j15_squared_generic(theta1, theta2, kTau); }

bool range_membership_icosahedral(double theta1, double theta2) {
  const double lo = -(2.0 * kTau + 1.0) / 5.0;
  const double hi = (2.0 * kTau + 1.0) / 27.0;
  if (theta1 < lo - kRangeTolerance || theta1 > hi + kRangeTolerance) return false;
  if ((7.0 - 4.0 * kTau) * theta1 > theta2 + kRangeTolerance) return false;
  return j15_squared(theta1, theta2) >= -kRangeTolerance;
}

}  // namespace povm
