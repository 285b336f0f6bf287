#include "povm/hermite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "povm/entropy.hpp"
#include "povm/errors.hpp"
#include "povm/interval.hpp"
#include "povm/invariants.hpp"
#include "povm/qsqrt5.hpp"
#include "povm/symmetry.hpp"

namespace povm {

namespace {

constexpr double kTau = std::numbers::phi;
constexpr double kTouchGap = 1e-9;
constexpr double kTouchDistance = 1e-6;
constexpr double kBelowTolerance = -1e-12;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

template <class F>
std::pair<long double, long double> golden_min(F&& f, long double a, long double b) {
  const long double r = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double c = b - r * (b - a), d = a + r * (b - a);
  long double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-15L; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

double basis_value(const std::string& name, const Eigen::Vector3d& u) {
  if (name == "1") return 1.0;
  if (name == "I6'^2") {
    const double a = evaluate_invariant(InvariantId::I6p, u);
    return a * a;
  }
  return evaluate_invariant(name, u);
}

struct ExpansionPlan {
  std::vector<std::string> basis;
  std::vector<std::string> probes;
};

ExpansionPlan plan_for(Family f) {
  switch (f) {
    case Family::cube: return {{"1", "I4"}, {"x1", "x3"}};
    case Family::cuboctahedron: return {{"1", "I4", "I6"}, {"x1", "x2", "x3"}};
    case Family::dodecahedron: return {{"1", "I6'"}, {"x1", "x6"}};
    case Family::icosidodecahedron: return {{"1", "I6'", "I10", "I6'^2"}, {"x1", "x5", "x6", "generic"}};
    default: return {{"1"}, {}};
  }
}

bool structurally_zero(const QSqrt5& x) { return x.is_zero(); }
bool structurally_zero(const Interval& x) { return x.contains_zero(); }

bool equal_within(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Exact Q(sqrt 5) coordinates of an icosahedral point.
std::array<QSqrt5, 3> exact_point(const BlochVector& v) {
  std::array<QSqrt5, 3> out;
  for (int i = 0; i < 3; ++i) {
    auto q = recognize_qsqrt5(v.vec()[i]);
    if (!q) throw ConvergenceError("coordinate " + fmt(v.vec()[i]) + " is not recognized in Q(sqrt 5)");
    out[i] = *q;
  }
  return out;
}

QSqrt5 dot3(const std::array<QSqrt5, 3>& a, const std::array<QSqrt5, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Inverse of a small matrix over Q(sqrt 5) by Gauss-Jordan elimination.
std::vector<std::vector<QSqrt5>> invert_exact(std::vector<std::vector<QSqrt5>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<QSqrt5>> inv(n, std::vector<QSqrt5>(n, QSqrt5(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = QSqrt5(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw ConvergenceError("singular probe system");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const QSqrt5 d = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] / d;
      inv[col][j] = inv[col][j] / d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const QSqrt5 f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - f * m[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

// J15^2 restricted to t2 = -(b/c) t1 - (d/c) t1^2, divided by t1^2.
template <class T>
Polynomial<T> restricted_quartic(const T& b, const T& c, const T& d, const T& tau) {
  using P = Polynomial<T>;
  const P t1 = P::identity();
  const P t2(std::vector<T>{T(0), T(0) - b / c, T(0) - d / c});
  const P j = j15_squared_generic<P>(t1, t2, P::constant(tau));
  const auto& co = j.coefficients();
  if (co.size() < 3) throw ConvergenceError("restricted J15^2 vanishes identically");
  for (int i = 0; i < 2; ++i)
    if (!structurally_zero(co[static_cast<std::size_t>(i)]))
      throw std::logic_error("restricted J15^2 has a nonzero low-order coefficient");
  return P(std::vector<T>(co.begin() + 2, co.end()));
}

IntervalSturmResult interval_pass() {
  const HsPovm povm = make_hs_povm(Family::icosidodecahedron);
  std::vector<std::array<QSqrt5, 3>> vs;
  for (const auto& v : povm.vectors()) {
    auto e = exact_point(v);
    if (!(dot3(e, e) == QSqrt5(1))) throw ConvergenceError("orbit vector is not exactly unit");
    vs.push_back(e);
  }
  std::vector<QSqrt5> nodes;
  for (const auto& w : vs) {
    const QSqrt5 t = -dot3(vs.front(), w);
    if (std::none_of(nodes.begin(), nodes.end(), [&](const QSqrt5& x) { return x == t; })) nodes.push_back(t);
  }
  std::sort(nodes.begin(), nodes.end());

  std::vector<Interval> ti;
  std::vector<int> mult;
  std::vector<std::vector<Interval>> derivs;
  for (const auto& t : nodes) {
    const QSqrt5 x = (QSqrt5(1) + t) / QSqrt5(2);
    ti.emplace_back(t);
    const bool endpoint = t == QSqrt5(1) || t == QSqrt5(-1);
    mult.push_back(endpoint ? 1 : 2);
    if (x.is_zero()) {
      derivs.push_back({Interval(0L)});
      continue;
    }
    const Interval xi(x);
    const Interval lx = log(xi);
    std::vector<Interval> dv{-(xi * lx)};
    if (!endpoint) dv.push_back(-(lx + Interval(1L)) / Interval(2L));
    derivs.push_back(dv);
  }
  const Polynomial<Interval> p = hermite_newton<Interval>(ti, mult, derivs);

  const QSqrt5 tau = QSqrt5::tau();
  const std::vector<std::array<QSqrt5, 3>> probes = {
      {QSqrt5(0), QSqrt5(0), QSqrt5(1)},
      {QSqrt5(0), tau, QSqrt5(1)},
      {QSqrt5(0), QSqrt5(1) / tau, tau},
      {QSqrt5(1), QSqrt5(2), QSqrt5(3)},
  };
  std::vector<std::vector<QSqrt5>> m;
  std::vector<Interval> rhs;
  for (const auto& y : probes) {
    const QSqrt5 n2 = dot3(y, y);
    const QSqrt5 n6 = n2 * n2 * n2;
    const QSqrt5 i6 = invariant_i6p(y[0], y[1], y[2], tau) / n6;
    const QSqrt5 i10 = invariant_i10(y[0], y[1], y[2], tau) / (n6 * n2 * n2);
    m.push_back({QSqrt5(1), i6, i10, i6 * i6});
    const Interval norm = sqrt(Interval(n2));
    Interval s(0L);
    for (const auto& w : vs) s += p(Interval(dot3(y, w)) / norm);
    rhs.push_back(s);
  }
  const auto inv = invert_exact(m);
  std::vector<Interval> coef(4, Interval(0L));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) coef[r] += Interval(inv[r][c]) * rhs[c];
  const Interval& b = coef[1];
  const Interval& c = coef[2];
  const Interval& d = coef[3];
  c.sign();  // C must be separated from zero before dividing

  IntervalSturmResult res;
  res.b = b.to_string(25);
  res.c = c.to_string(25);
  res.d = d.to_string(25);
  const Polynomial<Interval> q = restricted_quartic<Interval>(b, c, d, Interval(tau));
  res.root_count = sturm_root_count<Interval>(q);

  // Sign of P1 at an interior point of the orbit-map range.
  const auto& y = probes.back();
  const QSqrt5 n2 = dot3(y, y);
  const QSqrt5 n6 = n2 * n2 * n2;
  const Interval th1(invariant_i6p(y[0], y[1], y[2], tau) / n6);
  const Interval th2(invariant_i10(y[0], y[1], y[2], tau) / (n6 * n2 * n2));
  res.p1_positive_inside = (b * th1 + c * th2 + d * th1 * th1).sign() > 0;
  return res;
}

}  // namespace

std::vector<HermiteNode> hermite_nodes(const std::vector<double>& t) {
  std::vector<HermiteNode> out;
  for (double x : t) out.push_back({x, (std::abs(x - 1.0) < 1e-12 || std::abs(x + 1.0) < 1e-12) ? 1 : 2});
  return out;
}

long double HermitePolynomial::operator()(long double t) const {
  long double r = 0.0L;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) r = r * t + *it;
  return r;
}

long double HermitePolynomial::derivative(long double t) const {
  long double r = 0.0L;
  for (std::size_t i = coefficients.size(); i-- > 1;) r = r * t + coefficients[i] * static_cast<long double>(i);
  return r;
}

int HermitePolynomial::degree(double tol) const {
  for (std::size_t i = coefficients.size(); i-- > 0;)
    if (std::abs(static_cast<double>(coefficients[i])) > tol) return static_cast<int>(i);
  return -1;
}

HermitePolynomial hermite_interpolate(const std::function<long double(long double, int)>& f,
                                      const std::vector<HermiteNode>& nodes) {
  if (nodes.empty()) throw DomainError("hermite_interpolate: no nodes");
  std::vector<long double> t;
  std::vector<int> mult;
  std::vector<std::vector<long double>> derivs;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    if (nd.multiplicity < 1) throw DomainError("hermite_interpolate: multiplicity must be positive");
    if (nd.t < -1.0 - 1e-12 || nd.t > 1.0 + 1e-12) throw DomainError("hermite_interpolate: node outside [-1, 1]");
    if (i > 0 && !(nd.t > nodes[i - 1].t))
      throw DomainError("hermite_interpolate: nodes must be strictly increasing (duplicate node " + fmt(nd.t) + ")");
    std::vector<long double> dv;
    for (int m = 0; m < nd.multiplicity; ++m) dv.push_back(f(nd.t, m));
    t.push_back(nd.t);
    mult.push_back(nd.multiplicity);
    derivs.push_back(std::move(dv));
  }
  const auto p = hermite_newton<long double>(t, mult, derivs);
  return {p.coefficients(), nodes};
}

HermitePolynomial hermite_interpolate(const EntropyKernel& kernel, const std::vector<HermiteNode>& nodes) {
  for (const auto& nd : nodes)
    if (nd.multiplicity > 1 && nd.t <= -1.0 + 1e-15)
      throw SingularityError("hermite_interpolate: h' is singular at t = -1");
  return hermite_interpolate(
      [&](long double t, int order) {
        return order == 0 ? h_kernel_ld(t, kernel) : h_derivative_ld(t, order, kernel);
      },
      nodes);
}

BelowCheck verify_below(const HermitePolynomial& p, const EntropyKernel& kernel, std::size_t grid) {
  grid = std::max<std::size_t>(grid, 3);
  auto gap = [&](long double t) { return h_kernel_ld(std::clamp(t, -1.0L, 1.0L), kernel) - p(t); };
  std::vector<long double> ts(grid), g(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    ts[i] = -1.0L + 2.0L * static_cast<long double>(i) / static_cast<long double>(grid - 1);
    g[i] = gap(ts[i]);
  }
  BelowCheck out;
  long double best = g[0], best_t = ts[0];
  for (std::size_t i = 0; i < grid; ++i)
    if (g[i] < best) {
      best = g[i];
      best_t = ts[i];
    }
  std::string away;
  for (std::size_t i = 0; i < grid; ++i) {
    const bool left_ok = i == 0 || g[i] <= g[i - 1];
    const bool right_ok = i + 1 == grid || g[i] <= g[i + 1];
    if (!left_ok || !right_ok) continue;
    const long double a = ts[i == 0 ? 0 : i - 1];
    const long double b = ts[i + 1 == grid ? i : i + 1];
    auto [tm, gm] = golden_min(gap, a, b);
    if (g[i] < gm) {
      tm = ts[i];
      gm = g[i];
    }
    if (gm < best) {
      best = gm;
      best_t = tm;
    }
    if (gm < kTouchGap) {
      const bool at_node = std::any_of(p.nodes.begin(), p.nodes.end(), [&](const HermiteNode& nd) {
        return std::abs(static_cast<double>(tm) - nd.t) < kTouchDistance;
      });
      if (!at_node && away.empty()) away = fmt(static_cast<double>(tm));
      if (std::none_of(out.touch_points.begin(), out.touch_points.end(),
                       [&](double x) { return std::abs(x - static_cast<double>(tm)) < kTouchDistance; }))
        out.touch_points.push_back(static_cast<double>(tm));
    }
  }
  out.min_gap = static_cast<double>(best);
  out.argmin = static_cast<double>(best_t);
  if (out.min_gap < kBelowTolerance) {
    out.reason = "p exceeds h by " + fmt(-out.min_gap) + " at t = " + fmt(out.argmin);
  } else if (!away.empty()) {
    out.reason = "h - p vanishes away from the nodes at t = " + away;
  } else {
    out.passed = true;
  }
  return out;
}

LowerBound::LowerBound(const HsPovm& povm, HermitePolynomial p) : povm_(povm), p_(std::move(p)) {}

double LowerBound::orbit_sum(const Eigen::Vector3d& u) const {
  long double s = 0.0L;
  for (const auto& v : povm_.vectors()) s += p_(std::clamp(static_cast<long double>(u.dot(v.vec())), -1.0L, 1.0L));
  return static_cast<double>(s);
}

double LowerBound::operator()(const Eigen::Vector3d& u) const {
  const double k = povm_.size();
  return std::log(k / 2.0) + (2.0 / k) * orbit_sum(u);
}

LowerBound assemble_lower_bound(const HsPovm& povm, const HermitePolynomial& p) { return LowerBound(povm, p); }

std::map<std::string, double> InvariantExpansion::named() const {
  static const char* names[] = {"A", "B", "C", "D"};
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < coefficients.size() && i < 4; ++i) out[names[i]] = coefficients[i];
  return out;
}

double InvariantExpansion::evaluate(const Eigen::Vector3d& u) const {
  double s = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) s += coefficients[i] * basis_value(basis[i], u);
  return s;
}

Eigen::Vector3d inert_probe(const std::string& name) {
  if (name == "x1") return {0, 0, 1};
  if (name == "x2") return Eigen::Vector3d(0, 1, 1).normalized();
  if (name == "x3") return Eigen::Vector3d(1, 1, 1).normalized();
  if (name == "x5") return Eigen::Vector3d(0, kTau, 1).normalized();
  if (name == "x6") return Eigen::Vector3d(0, 1 / kTau, kTau).normalized();
  if (name == "generic") return Eigen::Vector3d(1, 2, 3).normalized();
  throw std::invalid_argument("unknown probe point '" + name + "'");
}

InvariantExpansion expand_in_invariants(const HsPovm& povm, const LowerBound& bound) {
  auto plan = plan_for(povm.family());
  if (plan.probes.empty()) plan.probes.push_back("antipode");
  InvariantExpansion ex;
  ex.basis = plan.basis;
  const auto n = static_cast<Eigen::Index>(plan.basis.size());
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& name = plan.probes[static_cast<std::size_t>(r)];
    const Eigen::Vector3d x = name == "antipode" ? Eigen::Vector3d(-povm.fiducial().vec()) : inert_probe(name);
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = basis_value(plan.basis[static_cast<std::size_t>(c)], x);
    rhs[r] = bound.orbit_sum(x);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv[sv.size() - 1] <= 1e-12 * sv[0]) throw ConvergenceError("expand_in_invariants: ill-conditioned probe system");
  const Eigen::VectorXd sol = m.fullPivLu().solve(rhs);
  ex.coefficients.assign(sol.data(), sol.data() + sol.size());

  std::mt19937_64 rng(42);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 50; ++i) {
    Eigen::Vector3d u;
    if (povm.family() == Family::ngon) {
      const double a = ang(rng);
      u = {std::cos(a), std::sin(a), 0.0};
    } else {
      u = Eigen::Vector3d(nd(rng), nd(rng), nd(rng)).normalized();
    }
    ex.residual = std::max(ex.residual, std::abs(bound.orbit_sum(u) - ex.evaluate(u)));
  }
  if (ex.residual > 1e-9)
    throw ConvergenceError("expand_in_invariants: checkpoint residual " + fmt(ex.residual) + " exceeds 1e-9");
  return ex;
}

SturmVerdict icosidodeca_sturm(double b, double c, double d) {
  if (std::abs(c) < 1e-14) throw DomainError("icosidodeca_positivity: C is too close to zero to divide by");
  SturmVerdict v;
  const auto q = restricted_quartic<QSqrt5>(QSqrt5(mpq_class(b)), QSqrt5(mpq_class(c)), QSqrt5(mpq_class(d)),
                                            QSqrt5::tau());
  for (const auto& x : q.coefficients()) v.q_coefficients.push_back(fmt(x.to_double()));
  v.root_count = sturm_root_count<QSqrt5>(q);
  v.precision_bits = 0;
  double mn = std::numeric_limits<double>::infinity();
  for (const auto& w : fibonacci_lattice(10000)) {
    const auto [t1, t2] = orbit_map_icosahedral(BlochVector::normalized(w));
    mn = std::min(mn, b * t1 + c * t2 + d * t1 * t1);
  }
  v.sampled_min = mn;
  v.positive = v.root_count == 0 && mn >= -1e-12;
  return v;
}

bool icosidodeca_positivity(double b, double c, double d) { return icosidodeca_sturm(b, c, d).positive; }

IntervalSturmResult icosidodeca_interval_sturm(int start_bits, int max_bits) {
  std::vector<int> ladder{start_bits};
  for (int b : {256, 384, 512})
    if (b > start_bits && b <= max_bits) ladder.push_back(b);
  if (max_bits > ladder.back()) ladder.push_back(max_bits);
  for (int bits : ladder) {
    PrecisionScope scope(bits);
    try {
      IntervalSturmResult r = interval_pass();
      r.precision_bits = bits;
      r.decided = true;
      return r;
    } catch (const AmbiguousSign&) {
      // retry with more bits
    }
  }
  IntervalSturmResult r;
  r.precision_bits = ladder.back();
  return r;
}

bool uniqueness_check(const HsPovm& povm) {
  const auto t = interpolation_set(povm);
  const auto& vs = povm.vectors();
  const Eigen::Vector3d v = povm.fiducial().vec();
  std::vector<BlochVector> antipodes;
  for (const auto& u : vs) antipodes.push_back(-u);
  auto in_t = [&](double x) { return std::any_of(t.begin(), t.end(), [&](double y) { return std::abs(x - y) < 1e-9; }); };

  if (povm.family() == Family::ngon) {
    // Minimizers lie on the circle of the polygon: walk candidates w with w.(-v) in T.
    const Eigen::Vector3d e = Eigen::Vector3d(0, 0, 1).cross(v).normalized();
    for (double x : t) {
      const double th = std::acos(std::clamp(x, -1.0, 1.0));
      for (double s : {1.0, -1.0}) {
        const Eigen::Vector3d w = std::cos(th) * (-v) + s * std::sin(th) * e;
        const bool all_in_t = std::all_of(vs.begin(), vs.end(), [&](const BlochVector& u) { return in_t(w.dot(u.vec())); });
        if (all_in_t && !contains_point(antipodes, w, 1e-8)) return false;
      }
    }
    return true;
  }

  // Multisets {a_u} over T \ {-1} obeying the design moment identities.
  const bool antipodal = std::all_of(vs.begin(), vs.end(), [&](const BlochVector& u) {
    return contains_point(vs, -u.vec(), 1e-8);
  });
  std::vector<double> vals;
  for (double x : t) {
    if (std::abs(x + 1.0) < 1e-12) continue;
    if (antipodal && std::abs(x - 1.0) < 1e-12) continue;
    vals.push_back(x);
  }
  const int k = povm.size();
  const int order = spherical_design_order(vs);
  std::vector<double> target;
  for (int s = 1; s <= order; ++s) target.push_back(s % 2 ? 0.0 : static_cast<double>(k) / (s + 1));
  std::vector<std::optional<QSqrt5>> exact;
  for (double x : vals) exact.push_back(recognize_qsqrt5(x));

  std::vector<int> counts(vals.size(), 0);
  bool found = false;
  auto check_leaf = [&]() {
    for (std::size_t s = 0; s < target.size(); ++s) {
      double m = 0.0;
      for (std::size_t i = 0; i < vals.size(); ++i) m += counts[i] * std::pow(vals[i], static_cast<int>(s + 1));
      if (std::abs(m - target[s]) > 1e-9 * k) return false;
    }
    // Confirm exactly when every value is known in Q(sqrt 5).
    if (std::all_of(exact.begin(), exact.end(), [](const auto& e) { return e.has_value(); })) {
      for (std::size_t s = 0; s < target.size(); ++s) {
        QSqrt5 m(0);
        for (std::size_t i = 0; i < vals.size(); ++i) {
          QSqrt5 p(1);
          for (std::size_t r = 0; r <= s; ++r) p = p * *exact[i];
          m = m + QSqrt5(counts[i]) * p;
        }
        const QSqrt5 want = (s + 1) % 2 ? QSqrt5(0) : QSqrt5(mpq_class(k, static_cast<long>(s + 2)));
        if (!(m == want)) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (found) return;
    if (i + 1 == vals.size()) {
      counts[i] = left;
      if (check_leaf()) found = true;
      return;
    }
    for (int c = 0; c <= left && !found; ++c) {
      counts[i] = c;
      self(self, i + 1, left - c);
    }
  };
  if (vals.empty()) return true;
  rec(rec, 0, k);
  return !found;
}

HermiteCertificate certify_minimum(const HsPovm& povm, const CertifyOptions& opts) {
  if (!povm.is_named()) throw std::invalid_argument("certify_minimum: only the named highly symmetric families");
  const auto start = std::chrono::steady_clock::now();
  HermiteCertificate cert;
  cert.family = povm.name();
  const int k = povm.size();
  try {
    cert.nodes = hermite_nodes(interpolation_set(povm));
    cert.polynomial = hermite_interpolate(opts.kernel, cert.nodes);
    cert.degree = cert.polynomial.degree(1e-10);
    const auto& g = *povm.group();
    const auto profile = double_coset_profile(g, povm.fiducial());
    cert.degree_bound = degree_bound(profile, k, static_cast<int>(stabilizer(g, povm.fiducial()).order()));
    cert.below = verify_below(cert.polynomial, opts.kernel, opts.below_grid);
    const LowerBound bound = assemble_lower_bound(povm, cert.polynomial);
    cert.expansion = expand_in_invariants(povm, bound);

    const Eigen::Vector3d v = povm.fiducial().vec();
    const auto& co = cert.expansion.coefficients;
    switch (povm.family()) {
      case Family::cube: {
        cert.dispatch = "cube";
        // B > 0: P is minimized where I4 is, the orbit of (1,1,1)/sqrt 3.
        cert.orbit_min_verdict =
            co[1] > 0 && equal_within(evaluate_invariant(InvariantId::I4, v), 1.0 / 3.0, 1e-12);
        if (!(co[1] > 0)) cert.reason = "B is not positive";
        break;
      }
      case Family::cuboctahedron: {
        cert.dispatch = "cuboctahedron";
        const double beta = -co[1] / (3.0 * co[2]);
        cert.beta = beta;
        std::vector<Eigen::Vector3d> crit = {inert_probe("x1"), inert_probe("x2"), inert_probe("x3")};
        if (beta > 0.25 && beta < 0.5)
          crit.emplace_back(std::sqrt(4 * beta - 1), std::sqrt(1 - 2 * beta), std::sqrt(1 - 2 * beta));
        const double at_v = cert.expansion.evaluate(inert_probe("x2"));
        bool lowest = equal_within(evaluate_invariant(InvariantId::I4, v), 0.5, 1e-12);
        for (std::size_t i = 0; i < crit.size(); ++i)
          if (i != 1 && !(cert.expansion.evaluate(crit[i]) > at_v + 1e-12)) lowest = false;
        cert.orbit_min_verdict = lowest;
        if (!lowest) cert.reason = "P does not attain its minimum only on the cuboctahedral orbit";
        break;
      }
      case Family::dodecahedron: {
        cert.dispatch = "dodecahedron";
        // B < 0: P is minimized where I6' is maximal, the dodecahedron vertices.
        cert.orbit_min_verdict = co[1] < 0 && equal_within(evaluate_invariant(InvariantId::I6p, v),
                                                             (2.0 + std::sqrt(5.0)) / 27.0, 1e-12);
        if (!(co[1] < 0)) cert.reason = "B is not negative";
        break;
      }
      case Family::icosidodecahedron: {
        cert.dispatch = "icosidodecahedron";
        const auto numeric = icosidodeca_sturm(co[1], co[2], co[3]);
        bool ok = numeric.positive;
        if (opts.kernel.kind() == EntropyKernel::Kind::shannon) {
          cert.sturm = icosidodeca_interval_sturm(opts.precision_bits, opts.max_precision_bits);
          ok = ok && cert.sturm->decided && cert.sturm->root_count == 0 && cert.sturm->p1_positive_inside;
          if (!cert.sturm->decided) cert.reason = "interval signs remain ambiguous at the maximum precision";
        } else {
          IntervalSturmResult r;
          r.root_count = numeric.root_count;
          r.decided = true;
          r.p1_positive_inside = numeric.sampled_min >= -1e-12;
          cert.sturm = r;
        }
        cert.orbit_min_verdict = ok && std::abs(v.z()) > 1 - 1e-12;
        if (!ok && cert.reason.empty()) cert.reason = "the zero parabola of P1 meets the boundary of the orbit-map range";
        break;
      }
      default: {
        cert.dispatch = "constant";
        cert.orbit_min_verdict = cert.expansion.basis.size() == 1;
        break;
      }
    }
    if (cert.degree_bound <= 2 && cert.dispatch != "constant")
      throw std::logic_error("degree bound <= 2 must give a constant lower bound for every kernel");

    cert.uniqueness_verdict = uniqueness_check(povm);
    cert.certified_min = bound(-v);
    long double hs = 0.0L;
    for (const auto& u : povm.vectors()) hs += h_kernel_ld(std::clamp(-v.dot(u.vec()), -1.0, 1.0), opts.kernel);
    cert.entropy_at_antipode = static_cast<double>(std::log(k / 2.0L) + (2.0L / k) * hs);

    if (!cert.below.passed)
      cert.reason = "interpolant is not below h: " + cert.below.reason;
    else if (cert.degree > cert.degree_bound)
      cert.reason = "degree " + std::to_string(cert.degree) + " exceeds bound " + std::to_string(cert.degree_bound);
    else if (!cert.orbit_min_verdict && cert.reason.empty())
      cert.reason = "orbit minimality not established";
    else if (cert.orbit_min_verdict && !cert.uniqueness_verdict)
      cert.reason = "a global minimizer off the antipodal orbit is not excluded";
    else if (std::abs(cert.certified_min - cert.entropy_at_antipode) > 1e-10)
      cert.reason = "P(-v) differs from H(-v)";
    cert.valid = cert.below.passed && cert.degree <= cert.degree_bound && cert.orbit_min_verdict &&
                 cert.uniqueness_verdict && std::abs(cert.certified_min - cert.entropy_at_antipode) <= 1e-10;
    if (cert.valid) cert.reason.clear();
  } catch (const std::exception& e) {
    cert.valid = false;
    cert.reason = e.what();
  }
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

}  // namespace povm
