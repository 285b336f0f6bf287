#include "povm/entropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "povm/errors.hpp"
#include "povm/parallel.hpp"
#include "povm/symmetry.hpp"

namespace povm {

namespace {

constexpr double kLabelTolerance = 1e-6;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Shannon H_B without argument validation; callers pass unit vectors.
double shannon_fast(const Eigen::Vector3d& u, const std::vector<BlochVector>& vs) {
  double s = 0.0;
  for (const auto& v : vs) {
    const double x = 0.5 * (1.0 + u.dot(v.vec()));
    if (x > 0.0) s -= x * std::log(x);
  }
  const double k = static_cast<double>(vs.size());
  return std::log(k / 2.0) + (2.0 / k) * s;
}

struct PlaneInfo {
  int rank = 3;
  Eigen::Vector3d e1, e2;  // orthonormal basis of the containing plane
};

PlaneInfo plane_of(const std::vector<BlochVector>& vs) {
  Eigen::Matrix<double, 3, Eigen::Dynamic> m(3, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j].vec();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  PlaneInfo p;
  p.rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > 1e-8) ++p.rank;
  if (p.rank == 1) {
    p.e1 = vs.front().vec();
    p.e2 = p.e1.unitOrthogonal();
  } else {
    p.e1 = vs.front().vec();
    Eigen::Vector3d normal = svd.matrixU().col(2);
    p.e2 = normal.cross(p.e1).normalized();
  }
  return p;
}

Eigen::Vector3d on_circle(const PlaneInfo& p, double theta) { return std::cos(theta) * p.e1 + std::sin(theta) * p.e2; }

// Golden-section minimization of f on [a, b].
template <class F>
double golden_section(F&& f, double a, double b, double tol) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && b - a > tol; ++it) {
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
  return fc <= fd ? c : d;
}

struct Refined {
  Eigen::Vector3d u;
  double f;
  bool converged;
};

// Nelder-Mead on the tangent chart a, b -> normalize(s + a e1 + b e2).
template <class F>
Refined nelder_mead_sphere(F&& f, const Eigen::Vector3d& start, double step, double ftol) {
  Eigen::Vector3d s = start.normalized();
  bool converged = false;
  double best_f = f(s);
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::Vector3d e1 = s.unitOrthogonal();
    const Eigen::Vector3d e2 = s.cross(e1);
    auto chart = [&](const Eigen::Vector2d& x) { return Eigen::Vector3d((s + x[0] * e1 + x[1] * e2).normalized()); };
    std::array<Eigen::Vector2d, 3> p = {Eigen::Vector2d(0, 0), Eigen::Vector2d(step, 0), Eigen::Vector2d(0, step)};
    std::array<double, 3> fv{};
    for (int i = 0; i < 3; ++i) fv[i] = f(chart(p[i]));
    converged = false;
    for (int it = 0; it < 4000; ++it) {
      std::array<int, 3> idx = {0, 1, 2};
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
      const int lo = idx[0], mid = idx[1], hi = idx[2];
      const double diam = std::max({(p[0] - p[1]).norm(), (p[0] - p[2]).norm(), (p[1] - p[2]).norm()});
      if (diam < 1e-10 || (fv[hi] - fv[lo] <= ftol * 1e-5 && diam < 1e-8)) {
        converged = true;
        break;
      }
      const Eigen::Vector2d c = 0.5 * (p[lo] + p[mid]);
      const Eigen::Vector2d xr = c + (c - p[hi]);
      const double fr = f(chart(xr));
      if (fr < fv[lo]) {
        const Eigen::Vector2d xe = c + 2.0 * (c - p[hi]);
        const double fe = f(chart(xe));
        if (fe < fr) {
          p[hi] = xe;
          fv[hi] = fe;
        } else {
          p[hi] = xr;
          fv[hi] = fr;
        }
      } else if (fr < fv[mid]) {
        p[hi] = xr;
        fv[hi] = fr;
      } else {
        const bool outside = fr < fv[hi];
        const Eigen::Vector2d xc = outside ? Eigen::Vector2d(c + 0.5 * (xr - c)) : Eigen::Vector2d(c + 0.5 * (p[hi] - c));
        const double fc = f(chart(xc));
        if (fc < std::min(fr, fv[hi])) {
          p[hi] = xc;
          fv[hi] = fc;
        } else {
          for (int i : {mid, hi}) {
            p[i] = p[lo] + 0.5 * (p[i] - p[lo]);
            fv[i] = f(chart(p[i]));
          }
        }
      }
    }
    const int best = static_cast<int>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    s = chart(p[best]);
    best_f = fv[best];
    step = 1e-4;  // restart with a fresh chart centred on the result
  }
  return {s, best_f, converged};
}

std::shared_ptr<const RotationGroup> full_symmetry_group(const HsPovm& povm) {
  const auto& vs = povm.vectors();
  bool collinear = true;
  for (const auto& v : vs)
    if (std::abs(std::abs(v.dot(vs.front())) - 1.0) > 1e-9) collinear = false;
  if (collinear) return nullptr;
  return std::make_shared<const RotationGroup>(rotation_symmetry_group(vs));
}

std::vector<std::size_t> stabilizer_indices(const RotationGroup& g, const Eigen::Vector3d& u, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if ((g[i] * u - u).norm() < tol) out.push_back(i);
  return out;
}

// Exact rotation axis through u of a non-identity stabilizer element.
Eigen::Vector3d snap_to_axis(const RotationGroup& g, const std::vector<std::size_t>& stab, const Eigen::Vector3d& u) {
  for (std::size_t i : stab) {
    const Eigen::Matrix3d& m = g[i];
    if ((m - Eigen::Matrix3d::Identity()).norm() < 1e-8) continue;
    Eigen::EigenSolver<Eigen::Matrix3d> es(m);
    for (int j = 0; j < 3; ++j) {
      if (std::abs(es.eigenvalues()[j] - std::complex<double>(1.0, 0.0)) < 1e-8) {
        Eigen::Vector3d axis = es.eigenvectors().col(j).real().normalized();
        return axis.dot(u) >= 0 ? axis : Eigen::Vector3d(-axis);
      }
    }
  }
  return u;
}

bool near_antipode(const HsPovm& povm, const Eigen::Vector3d& u, double tol) {
  for (const auto& v : povm.vectors())
    if ((u + v.vec()).norm() < tol) return true;
  return false;
}

double inert_statistic(const RotationGroup& g, const Eigen::Vector3d& u, const BlochVector& v) {
  std::vector<Eigen::Vector3d> orb;
  for (const auto& m : g.elements()) {
    const Eigen::Vector3d w = m * u;
    if (std::none_of(orb.begin(), orb.end(), [&](const Eigen::Vector3d& o) { return (o - w).norm() < 1e-8; }))
      orb.push_back(w);
  }
  double s = 0.0;
  for (const auto& w : orb) {
    const double t = w.dot(v.vec());
    if (1.0 + t <= 0.0) return std::numeric_limits<double>::infinity();
    s += t * std::log1p(t);
  }
  return 2.0 * s / static_cast<double>(orb.size());
}

void label_point(CriticalPoint& cp, const HsPovm& povm, const RotationGroup* g) {
  const Eigen::Vector3d u = cp.location.vec();
  cp.classifier_statistic = kNan;
  if (near_antipode(povm, u, kLabelTolerance)) {
    cp.type_label = TypeLabel::I;
    return;
  }
  if (!g) {
    cp.type_label = TypeLabel::non_inert;
    return;
  }
  const auto stab = stabilizer_indices(*g, u, kLabelTolerance);
  if (stab.size() >= 3)
    cp.type_label = TypeLabel::II;
  else if (stab.size() == 2)
    cp.type_label = TypeLabel::III;
  else
    cp.type_label = TypeLabel::non_inert;
  if (stab.size() >= 2) cp.classifier_statistic = inert_statistic(*g, snap_to_axis(*g, stab, u), povm.fiducial());
}

std::vector<Refined> circle_search(const HsPovm& povm, const PlaneInfo& plane, double sign, std::size_t samples) {
  const auto& vs = povm.vectors();
  auto f = [&](double th) { return sign * shannon_fast(on_circle(plane, th), vs); };
  const std::size_t m = std::max<std::size_t>(samples, 64);
  const double dth = 2.0 * std::numbers::pi / static_cast<double>(m);
  std::vector<double> vals(m);
  for (std::size_t i = 0; i < m; ++i) vals[i] = f(dth * static_cast<double>(i));
  std::vector<Refined> out;
  for (std::size_t i = 0; i < m; ++i) {
    const double prev = vals[(i + m - 1) % m], next = vals[(i + 1) % m];
    if (vals[i] <= prev && vals[i] <= next) {
      const double th0 = dth * static_cast<double>(i);
      const double th = golden_section(f, th0 - dth, th0 + dth, 1e-13);
      out.push_back({on_circle(plane, th), f(th), true});
    }
  }
  return out;
}

}  // namespace

double entropy_at(const BlochVector& u, const HsPovm& povm, const EntropyKernel& kernel) {
  if (kernel.kind() == EntropyKernel::Kind::shannon) {
    const double k = povm.size();
    double s = 0.0;
    for (const auto& v : povm.vectors()) s += h(std::clamp(u.dot(v), -1.0, 1.0));
    return std::log(k / 2.0) + (2.0 / k) * s;
  }
  const auto p = outcome_probabilities(u.vec(), povm);
  return kernel.entropy(p);
}

double relative_entropy_at(const BlochVector& u, const HsPovm& povm) {
  return std::log(static_cast<double>(povm.size())) - entropy_at(u, povm);
}

std::vector<double> outcome_probabilities(const Eigen::Vector3d& u, const HsPovm& povm) {
  if (!(u.norm() <= 1.0 + 1e-12)) throw DomainError("outcome_probabilities: Bloch point outside the unit ball");
  std::vector<double> p;
  p.reserve(povm.vectors().size());
  const double k = povm.size();
  for (const auto& v : povm.vectors()) p.push_back(std::max(0.0, (1.0 + u.dot(v.vec())) / k));
  return p;
}

double entropy_at_point(const Eigen::Vector3d& u, const HsPovm& povm, const EntropyKernel& kernel) {
  const auto p = outcome_probabilities(u, povm);
  return kernel.entropy(p);
}

std::vector<Eigen::Vector3d> fibonacci_lattice(std::size_t n) {
  std::vector<Eigen::Vector3d> pts(n);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(i);
    pts[i] = Eigen::Vector3d(r * std::cos(phi), r * std::sin(phi), z);
  }
  return pts;
}

double sphere_average_relative_entropy(const HsPovm& povm, std::size_t n, unsigned threads) {
  if (n == 0) throw std::invalid_argument("sphere_average_relative_entropy: n must be positive");
  const auto pts = fibonacci_lattice(n);
  std::vector<double> vals(n);
  const double lnk = std::log(static_cast<double>(povm.size()));
  parallel_for(n, [&](std::size_t i) { vals[i] = lnk - shannon_fast(pts[i], povm.vectors()); }, threads);
  long double acc = 0.0L;
  for (double v : vals) acc += v;
  return static_cast<double>(acc / static_cast<long double>(n));
}

std::string to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::min: return "min";
    case CriticalKind::max: return "max";
    case CriticalKind::saddle: return "saddle";
    case CriticalKind::degenerate: return "degenerate";
  }
  return "?";
}

std::string to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::I: return "I";
    case TypeLabel::II: return "II";
    case TypeLabel::III: return "III";
    case TypeLabel::non_inert: return "non-inert";
  }
  return "?";
}

std::vector<CriticalPoint> find_extrema(const HsPovm& povm, ExtremumMode mode, const ExtremaOptions& opts) {
  const auto& vs = povm.vectors();
  const double sign = mode == ExtremumMode::min ? 1.0 : -1.0;
  const PlaneInfo plane = plane_of(vs);

  std::vector<Refined> refined;
  if (plane.rank <= 2 && mode == ExtremumMode::min) {
    refined = circle_search(povm, plane, sign, std::max<std::size_t>(opts.grid / 10, 2000));
  } else {
    const std::size_t n = std::max<std::size_t>(opts.grid, 1000);
    const auto pts = fibonacci_lattice(n);
    std::vector<double> vals(n);
    parallel_for(n, [&](std::size_t i) { vals[i] = sign * shannon_fast(pts[i], vs); }, opts.threads);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const std::size_t keep = std::min<std::size_t>(n, 5000);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](std::size_t a, std::size_t b) { return vals[a] < vals[b] || (vals[a] == vals[b] && a < b); });
    const double spacing = std::sqrt(4.0 * std::numbers::pi / static_cast<double>(n));
    const double radius = 3.0 * spacing;
    std::vector<Eigen::Vector3d> seeds;
    for (std::size_t r = 0; r < keep && seeds.size() < 500; ++r) {
      const Eigen::Vector3d& p = pts[order[r]];
      if (std::none_of(seeds.begin(), seeds.end(), [&](const Eigen::Vector3d& s) { return (s - p).norm() < radius; }))
        seeds.push_back(p);
    }
    refined.resize(seeds.size());
    auto f = [&](const Eigen::Vector3d& u) { return sign * shannon_fast(u, vs); };
    parallel_for(seeds.size(), [&](std::size_t i) { refined[i] = nelder_mead_sphere(f, seeds[i], spacing, opts.ftol); },
                 opts.threads);
  }

  std::stable_sort(refined.begin(), refined.end(), [](const Refined& a, const Refined& b) { return a.f < b.f; });
  std::vector<Refined> clusters;
  for (const auto& r : refined) {
    if (r.f > refined.front().f + opts.value_tolerance) break;
    const bool dup = std::any_of(clusters.begin(), clusters.end(), [&](const Refined& c) {
      return std::atan2(c.u.cross(r.u).norm(), c.u.dot(r.u)) < opts.cluster_radius;
    });
    if (!dup) clusters.push_back(r);
  }

  const auto group = full_symmetry_group(povm);
  std::vector<CriticalPoint> out;
  for (const auto& c : clusters) {
    CriticalPoint cp;
    cp.location = BlochVector::normalized(c.u);
    cp.value = sign * c.f;
    cp.kind = mode == ExtremumMode::min ? CriticalKind::min : CriticalKind::max;
    cp.converged = c.converged;
    label_point(cp, povm, group.get());
    out.push_back(cp);
  }
  return out;
}

CriticalPoint classify_inert_point(const BlochVector& u, const HsPovm& povm) {
  CriticalPoint cp;
  cp.location = u;
  cp.value = entropy_at(u, povm);
  cp.classifier_statistic = kNan;
  if (near_antipode(povm, u.vec(), 1e-8)) {
    cp.type_label = TypeLabel::I;
    cp.kind = CriticalKind::min;
    return cp;
  }
  const auto group = full_symmetry_group(povm);
  if (!group) throw DomainError("classify_inert_point: symmetry group of a collinear POVM is not finite");
  const auto stab = stabilizer_indices(*group, u.vec(), 1e-8);
  if (stab.size() < 2) throw DomainError("classify_inert_point: point is not on a rotation axis of the POVM");
  const double s = inert_statistic(*group, u.vec(), povm.fiducial());
  cp.classifier_statistic = s;
  if (stab.size() >= 3) {
    cp.type_label = TypeLabel::II;
    if (std::abs(s - 1.0) < 1e-9)
      cp.kind = CriticalKind::degenerate;
    else
      cp.kind = s > 1.0 ? CriticalKind::min : CriticalKind::max;
    return cp;
  }
  // Order-2 axis: the Hessian need not be isotropic; probe second differences.
  cp.type_label = TypeLabel::III;
  const Eigen::Vector3d e1 = u.vec().unitOrthogonal();
  const Eigen::Vector3d e2 = u.vec().cross(e1);
  const double eps = 1e-4;
  const double f0 = shannon_fast(u.vec(), povm.vectors());
  int pos = 0, neg = 0;
  for (int j = 0; j < 8; ++j) {
    const double a = std::numbers::pi * j / 8.0;
    const Eigen::Vector3d d = std::cos(a) * e1 + std::sin(a) * e2;
    const double fp = shannon_fast(std::cos(eps) * u.vec() + std::sin(eps) * d, povm.vectors());
    const double fm = shannon_fast(std::cos(eps) * u.vec() - std::sin(eps) * d, povm.vectors());
    const double d2 = (fp + fm - 2.0 * f0) / (eps * eps);
    if (d2 > 1e-6)
      ++pos;
    else if (d2 < -1e-6)
      ++neg;
  }
  if (pos == 8)
    cp.kind = CriticalKind::min;
  else if (neg == 8)
    cp.kind = CriticalKind::max;
  else if (pos > 0 && neg > 0)
    cp.kind = CriticalKind::saddle;
  else
    cp.kind = CriticalKind::degenerate;
  return cp;
}

double rectangle_bifurcation_function(double alpha) {
  const double t = std::tan(alpha / 4.0);
  return std::cos(alpha / 2.0) * std::log(t * t) + 2.0;
}

double rectangle_bifurcation_threshold() {
  double a = 1e-9, b = std::numbers::pi / 2.0;
  double fa = rectangle_bifurcation_function(a);
  while (b - a > 1e-13) {
    const double m = 0.5 * (a + b);
    const double fm = rectangle_bifurcation_function(m);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

EntropyLandscape sample_landscape(const HsPovm& povm, std::size_t n, bool with_extrema, unsigned threads) {
  EntropyLandscape l{povm, fibonacci_lattice(n), std::vector<double>(n), {}};
  parallel_for(n, [&](std::size_t i) { l.entropy[i] = shannon_fast(l.points[i], povm.vectors()); }, threads);
  if (with_extrema) {
    ExtremaOptions o;
    o.threads = threads;
    l.extrema = find_extrema(povm, ExtremumMode::min, o);
  }
  return l;
}

}  // namespace povm
