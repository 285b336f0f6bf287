#include "povm/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "povm/errors.hpp"

namespace povm {

namespace {

constexpr double kNegativeDust = 1e-12;

bool is_shannon_like(const EntropyKernel& k) {
  return k.kind() == EntropyKernel::Kind::shannon || std::abs(k.alpha() - 1.0) < 1e-12;
}

// d^n/dx^n of -x ln x for n >= 1.
template <class T>
T eta_derivative(T x, int order) {
  using std::log;
  using std::pow;
  if (order == 1) return -log(x) - T(1);
  T fact = 1;
  for (int i = 2; i <= order - 2; ++i) fact *= T(i);
  const T sign = (order % 2 == 0) ? T(-1) : T(1);
  return sign * fact / pow(x, T(order - 1));
}

template <class T>
T tsallis_derivative(T x, int order, T alpha) {
  using std::pow;
  // d^n/dx^n of (x - x^alpha)/(alpha - 1)
  T falling = 1;
  for (int i = 0; i < order; ++i) falling *= (alpha - T(i));
  const T exponent = alpha - T(order);
  T power;
  if (x == T(0)) {
    if (exponent < T(0)) throw SingularityError("Tsallis kernel derivative diverges at 0");
    power = (exponent == T(0)) ? T(1) : T(0);
  } else {
    power = pow(x, exponent);
  }
  const T linear = (order == 1) ? T(1) : T(0);
  return (linear - falling * power) / (alpha - T(1));
}

void check_h_domain(double t) {
  if (!(t >= -1.0 - kNegativeDust && t <= 1.0 + kNegativeDust)) {
    std::ostringstream os;
    os << "h: t = " << t << " outside [-1, 1]";
    throw DomainError(os.str());
  }
}

}  // namespace

BlochVector::BlochVector(double x, double y, double z) : BlochVector(Eigen::Vector3d(x, y, z)) {}

BlochVector::BlochVector(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) >= kNormTolerance) {
    std::ostringstream os;
    os << "BlochVector: norm " << n << " is not 1 within " << kNormTolerance;
    throw DomainError(os.str());
  }
  v_ = v / n;
}

BlochVector BlochVector::normalized(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("BlochVector::normalized: zero or non-finite vector");
  return BlochVector(v / n, Trusted{});
}

BlochVector BlochVector::operator-() const { return BlochVector(-v_, Trusted{}); }

double angular_distance(const BlochVector& a, const BlochVector& b) {
  // atan2 form stays accurate for nearly (anti)parallel vectors
  return std::atan2(a.vec().cross(b.vec()).norm(), a.dot(b));
}

ProbabilityVector::ProbabilityVector(std::vector<double> p, int d) : p_(std::move(p)) {
  const double k = static_cast<double>(p_.size());
  if (p_.empty()) throw DomainError("ProbabilityVector: empty");
  double sum = 0.0;
  for (double x : p_) {
    if (x < -kNegativeDust || x > d / k + kNegativeDust) throw DomainError("ProbabilityVector: entry outside [0, d/k]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw DomainError("ProbabilityVector: entries do not sum to 1");
}

EntropyKernel EntropyKernel::renyi(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) throw DomainError("Renyi kernel requires alpha > 0, alpha != 1");
  return EntropyKernel(Kind::renyi, alpha);
}

EntropyKernel EntropyKernel::tsallis(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) throw DomainError("Tsallis kernel requires alpha > 0, alpha != 1");
  return EntropyKernel(Kind::tsallis, alpha);
}

std::string EntropyKernel::name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::shannon: return "shannon";
    case Kind::renyi: os << "renyi(" << alpha_ << ")"; break;
    case Kind::tsallis: os << "tsallis(" << alpha_ << ")"; break;
  }
  return os.str();
}

double EntropyKernel::phi(double x) const { return static_cast<double>(phi_ld(x)); }

long double EntropyKernel::phi_ld(long double x) const {
  if (is_shannon_like(*this)) return eta_ld(x);
  if (x < -kNegativeDust) throw DomainError("entropy kernel: negative argument");
  if (x <= 0) return 0.0L;
  const long double a = alpha_;
  return (x - std::pow(x, a)) / (a - 1.0L);
}

double EntropyKernel::phi_derivative(double x, int order) const {
  return static_cast<double>(phi_derivative_ld(x, order));
}

long double EntropyKernel::phi_derivative_ld(long double x, int order) const {
  if (order < 1) return phi_ld(x);
  if (x < 0) throw DomainError("entropy kernel derivative: negative argument");
  if (is_shannon_like(*this)) {
    if (x == 0) throw SingularityError("eta derivative diverges at 0");
    return eta_derivative<long double>(x, order);
  }
  return tsallis_derivative<long double>(x, order, alpha_);
}

double EntropyKernel::entropy(std::span<const double> p) const {
  if (is_shannon_like(*this)) {
    double s = 0.0;
    for (double x : p) s += eta(x);
    return s;
  }
  double power_sum = 0.0;
  for (double x : p) power_sum += (x <= 0.0) ? 0.0 : std::pow(x, alpha_);
  if (kind_ == Kind::renyi) return std::log(power_sum) / (1.0 - alpha_);
  return (1.0 - power_sum) / (alpha_ - 1.0);
}

double probability_from_dot(double dot, int d, int k) { return ((d - 1) * dot + 1.0) / k; }

double probability(const BlochVector& u, const BlochVector& v, int d, int k) {
  if (k < d) throw DomainError("probability: k must be >= d");
  return probability_from_dot(u.dot(v), d, k);
}

double eta(double x) { return static_cast<double>(eta_ld(x)); }

long double eta_ld(long double x) {
  if (x <= 0.0L) {
    if (x < -kNegativeDust) throw DomainError("eta: negative argument");
    return 0.0L;
  }
  if (x > 1.0L + kNegativeDust) throw DomainError("eta: argument above 1");
  return -x * std::log(x);
}

double h(double t, int d) {
  if (d < 2) throw DomainError("h: d must be >= 2");
  const double lo = -1.0 / (d - 1);
  if (!(t >= lo - kNegativeDust && t <= 1.0 + kNegativeDust)) throw DomainError("h: t outside [-1/(d-1), 1]");
  return eta(((d - 1) * t + 1.0) / d);
}

double h_kernel(double t, const EntropyKernel& kernel) { return static_cast<double>(h_kernel_ld(t, kernel)); }

long double h_kernel_ld(long double t, const EntropyKernel& kernel) {
  check_h_domain(static_cast<double>(t));
  return kernel.phi_ld((t + 1.0L) / 2.0L);
}

double h_derivative(double t, int order, const EntropyKernel& kernel) {
  return static_cast<double>(h_derivative_ld(t, order, kernel));
}

long double h_derivative_ld(long double t, int order, const EntropyKernel& kernel) {
  check_h_domain(static_cast<double>(t));
  if (order == 0) return h_kernel_ld(t, kernel);
  if (order < 0) throw DomainError("h_derivative: negative order");
  const long double x = (t + 1.0L) / 2.0L;
  if (x <= 0.0L && is_shannon_like(kernel)) throw SingularityError("h derivative diverges at t = -1");
  return std::pow(0.5L, order) * kernel.phi_derivative_ld(std::max(x, 0.0L), order);
}

double fubini_study_distance(const BlochVector& u, const BlochVector& v) {
  const double c = std::clamp((1.0 + u.dot(v)) / 2.0, 0.0, 1.0);
  return std::acos(std::sqrt(c));
}

}  // namespace povm
