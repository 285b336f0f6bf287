#pragma once

// Lower-bound certificates for the entropy minimum of highly symmetric
// POVMs: Hermite interpolation of h from below on the interpolation set,
// the invariant lower-bound polynomial, its expansion in primary
// invariants, and the family-specific sign and Sturm arguments.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "povm/bloch.hpp"
#include "povm/catalog.hpp"
#include "povm/polynomial.hpp"
#include "povm/sturm.hpp"

namespace povm {

struct HermiteNode {
  double t = 0.0;
  /// Number of matched derivatives (value only = 1).
  int multiplicity = 1;
};

/// Nodes for an interpolation set: multiplicity 1 at t = +-1, 2 elsewhere.
std::vector<HermiteNode> hermite_nodes(const std::vector<double>& t);

struct HermitePolynomial {
  /// Monomial coefficients, ascending.
  std::vector<long double> coefficients;
  std::vector<HermiteNode> nodes;

  long double operator()(long double t) const;
  long double derivative(long double t) const;
  /// Degree after dropping trailing coefficients with |c| <= tol.
  int degree(double tol = 0.0) const;
};

/// Newton divided differences on repeated abscissae. `derivs[i][m]` is the
/// m-th derivative at node i, m < multiplicity. The result is in the
/// monomial basis of the coefficient ring T.
template <class T>
Polynomial<T> hermite_newton(const std::vector<T>& t, const std::vector<int>& multiplicity,
                             const std::vector<std::vector<T>>& derivs) {
  std::vector<std::size_t> node_of;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int m = 0; m < multiplicity[i]; ++m) node_of.push_back(i);
  const std::size_t n = node_of.size();
  std::vector<std::vector<T>> q(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) q[i][0] = derivs[node_of[i]][0];
  T factorial(1);
  for (std::size_t j = 1; j < n; ++j) {
    factorial = factorial * T(static_cast<long>(j));
    for (std::size_t i = j; i < n; ++i) {
      if (node_of[i] == node_of[i - j])
        q[i][j] = derivs[node_of[i]][j] / factorial;
      else
        q[i][j] = (q[i][j - 1] - q[i - 1][j - 1]) / (t[node_of[i]] - t[node_of[i - j]]);
    }
  }
  Polynomial<T> p = Polynomial<T>::constant(q[n - 1][n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * Polynomial<T>(std::vector<T>{-t[node_of[i]], T(1)}) + Polynomial<T>::constant(q[i][i]);
  }
  return p;
}

/// Interpolant of h (for the given kernel) matching values at every node and
/// first derivatives at double nodes. Throws DomainError for unsorted or
/// duplicate nodes, SingularityError for a derivative request at t = -1.
HermitePolynomial hermite_interpolate(const EntropyKernel& kernel, const std::vector<HermiteNode>& nodes);
/// Same for an arbitrary smooth f given through f(t, order).
HermitePolynomial hermite_interpolate(const std::function<long double(long double, int)>& f,
                                      const std::vector<HermiteNode>& nodes);

struct BelowCheck {
  /// min of h - p over the grid and refined local minima.
  double min_gap = 0.0;
  double argmin = 0.0;
  /// Locations of refined local minima with gap below 1e-9.
  std::vector<double> touch_points;
  bool passed = false;
  std::string reason;
};

/// Checks h >= p on [-1, 1]: a uniform grid plus golden-section refinement of
/// every local minimum of the gap. Passes iff min_gap >= -1e-12 and each local
/// minimum with gap < 1e-9 lies within 1e-6 of a node.
BelowCheck verify_below(const HermitePolynomial& p, const EntropyKernel& kernel = EntropyKernel::shannon(),
                        std::size_t grid = 100000);

/// u -> P_v(u) = ln(k/2) + (2/k) sum_j p(u.v_j), together with the orbit sum
/// S(u) = sum_j p(u.v_j).
class LowerBound {
 public:
  LowerBound(const HsPovm& povm, HermitePolynomial p);
  double operator()(const Eigen::Vector3d& u) const;
  double orbit_sum(const Eigen::Vector3d& u) const;
  const HsPovm& povm() const { return povm_; }
  const HermitePolynomial& polynomial() const { return p_; }

 private:
  HsPovm povm_;
  HermitePolynomial p_;
};

LowerBound assemble_lower_bound(const HsPovm& povm, const HermitePolynomial& p);

/// Coefficients of the orbit sum S restricted to the sphere (the circle z = 0
/// for polygons) in the family's invariant basis. P_v = ln(k/2) + (2/k) S.
struct InvariantExpansion {
  std::vector<std::string> basis;  // "1", "I4", "I6", "I6'", "I10", "I6'^2"
  std::vector<double> coefficients;
  /// Max |S - fit| over 50 seeded random checkpoints.
  double residual = 0.0;
  /// Named view: A, B, C, D in basis order.
  std::map<std::string, double> named() const;
  double evaluate(const Eigen::Vector3d& u) const;
};

/// Throws ConvergenceError if the probe system is ill-conditioned or the
/// checkpoint residual exceeds 1e-9.
InvariantExpansion expand_in_invariants(const HsPovm& povm, const LowerBound& bound);

/// Probe points of the octahedral and icosahedral inert orbits.
Eigen::Vector3d inert_probe(const std::string& name);

struct SturmVerdict {
  int root_count = -1;
  /// MPFR precision at which every sign was decided (0 for exact arithmetic).
  int precision_bits = 0;
  /// Sampled minimum of P1 = B t1 + C t2 + D t1^2 over orbit-map images.
  double sampled_min = 0.0;
  bool positive = false;
  std::vector<std::string> q_coefficients;
};

/// Exact Sturm count over Q(sqrt 5) for the quartic obtained by restricting
/// J15^2 to the zero parabola of P1, with B, C, D taken as exact rationals,
/// plus a check that P1 >= 0 on 10^4 orbit-map samples. Throws DomainError
/// when |C| < 1e-14.
SturmVerdict icosidodeca_sturm(double b, double c, double d);
/// True iff the quartic has no real roots and the sampled P1 is nonnegative.
bool icosidodeca_positivity(double b, double c, double d);

/// The icosidodecahedral verdict with B, C, D built in interval arithmetic
/// from exact Q(sqrt 5) nodes and probes. Precision starts at `start_bits`
/// and escalates up to `max_bits` until every sign is unambiguous.
struct IntervalSturmResult {
  int root_count = -1;
  int precision_bits = 0;
  bool decided = false;
  std::string b, c, d;  // interval enclosures
  bool p1_positive_inside = false;
};
IntervalSturmResult icosidodeca_interval_sturm(int start_bits = 200, int max_bits = 512);

struct CertifyOptions {
  EntropyKernel kernel = EntropyKernel::shannon();
  int precision_bits = 200;
  int max_precision_bits = 512;
  std::size_t below_grid = 100000;
};

struct HermiteCertificate {
  std::string family;
  std::vector<HermiteNode> nodes;
  HermitePolynomial polynomial;
  int degree = 0;
  int degree_bound = 0;
  BelowCheck below;
  InvariantExpansion expansion;
  std::optional<double> beta;
  std::string dispatch;  // "constant", "cube", "cuboctahedron", ...
  bool orbit_min_verdict = false;
  bool uniqueness_verdict = false;
  std::optional<IntervalSturmResult> sturm;
  /// P_v(-v) and H(-v); equal when the certificate is valid.
  double certified_min = 0.0;
  double entropy_at_antipode = 0.0;
  bool valid = false;
  std::string reason;
  double seconds = 0.0;
};

/// Runs the whole pipeline for a named family (digon, n-gons, polyhedra).
/// Never throws for sub-step failures: the certificate is marked invalid.
/// Throws std::invalid_argument for custom or rectangle POVMs.
HermiteCertificate certify_minimum(const HsPovm& povm, const CertifyOptions& opts = {});

/// Every w with {w.u : u in orbit} inside T lies on the antipodal orbit.
/// Polyhedra: multiset enumeration with design moment constraints;
/// polygons: candidates on the circle.
bool uniqueness_check(const HsPovm& povm);

}  // namespace povm
