#include "povm/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace povm {

namespace {

constexpr double kTau = std::numbers::phi;
constexpr double kPointTolerance = 1e-8;

bool same_matrix(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  return (a - b).norm() < RotationGroup::kMatrixTolerance;
}

std::size_t expected_order(GroupKind kind, int n) {
  switch (kind) {
    case GroupKind::cyclic: return static_cast<std::size_t>(n);
    case GroupKind::dihedral: return static_cast<std::size_t>(2 * n);
    case GroupKind::tetrahedral: return 12;
    case GroupKind::octahedral: return 24;
    case GroupKind::icosahedral: return 60;
    case GroupKind::other: break;
  }
  return 0;
}

std::array<double, 3> rounded_key(const Eigen::Vector3d& v) {
  std::array<double, 3> key{};
  for (int i = 0; i < 3; ++i) {
    double r = std::round(v[i] * 1e8) / 1e8;
    key[i] = (r == 0.0) ? 0.0 : r;  // fold -0 into 0
  }
  return key;
}

}  // namespace

RotationGroup::RotationGroup(GroupKind kind, int n, std::vector<Eigen::Matrix3d> elements)
    : kind_(kind), n_(n), elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("RotationGroup: empty element list");
}

std::string RotationGroup::name() const {
  switch (kind_) {
    case GroupKind::cyclic: return "C_" + std::to_string(n_);
    case GroupKind::dihedral: return "D_" + std::to_string(n_);
    case GroupKind::tetrahedral: return "T";
    case GroupKind::octahedral: return "O";
    case GroupKind::icosahedral: return "I";
    case GroupKind::other: break;
  }
  return "G_" + std::to_string(order());
}

std::optional<std::size_t> RotationGroup::find(const Eigen::Matrix3d& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (same_matrix(elements_[i], m)) return i;
  return std::nullopt;
}

std::size_t RotationGroup::identity_index() const {
  auto i = find(Eigen::Matrix3d::Identity());
  if (!i) throw std::logic_error("RotationGroup: identity missing");
  return *i;
}

std::size_t RotationGroup::inverse_index(std::size_t i) const {
  auto j = find(elements_.at(i).transpose());
  if (!j) throw std::logic_error("RotationGroup: not closed under inverse");
  return *j;
}

std::size_t RotationGroup::product_index(std::size_t i, std::size_t j) const {
  auto r = find(elements_.at(i) * elements_.at(j));
  if (!r) throw std::logic_error("RotationGroup: not closed under product");
  return *r;
}

Eigen::Matrix3d axis_rotation(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0.0)) throw std::invalid_argument("axis_rotation: zero axis");
  const Eigen::Vector3d a = axis / n;
  Eigen::Matrix3d k;
  k << 0, -a.z(), a.y(), a.z(), 0, -a.x(), -a.y(), a.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

Eigen::Matrix3d snap_algebraic(const Eigen::Matrix3d& m) {
  static const std::array<double, 5> targets = {0.0, 1.0, 0.5, kTau / 2.0, 1.0 / (2.0 * kTau)};
  Eigen::Matrix3d out = m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double a = std::abs(m(i, j));
      for (double t : targets) {
        if (std::abs(a - t) < 1e-9) {
          out(i, j) = std::copysign(t, m(i, j));
          if (t == 0.0) out(i, j) = 0.0;
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Eigen::Matrix3d> close_under_product(std::span<const Eigen::Matrix3d> generators,
                                                 std::size_t max_order) {
  std::vector<Eigen::Matrix3d> els{Eigen::Matrix3d::Identity()};
  auto known = [&](const Eigen::Matrix3d& m) {
    return std::any_of(els.begin(), els.end(), [&](const Eigen::Matrix3d& e) { return same_matrix(e, m); });
  };
  for (std::size_t frontier = 0; frontier < els.size(); ++frontier) {
    for (const auto& g : generators) {
      Eigen::Matrix3d m = snap_algebraic(g * els[frontier]);
      if (!known(m)) {
        els.push_back(m);
        if (els.size() > max_order) throw std::logic_error("close_under_product: closure exceeds expected order");
      }
    }
  }
  return els;
}

RotationGroup generate_group(GroupKind kind, int n) {
  using std::numbers::pi;
  std::vector<Eigen::Matrix3d> gens;
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  const Eigen::Vector3d diag(1.0, 1.0, 1.0);
  switch (kind) {
    case GroupKind::cyclic:
      if (n < 1) throw std::invalid_argument("generate_group: C_n needs n >= 1");
      gens.push_back(axis_rotation(z, 2.0 * pi / n));
      break;
    case GroupKind::dihedral:
      if (n < 2) throw std::invalid_argument("generate_group: D_n needs n >= 2");
      gens.push_back(axis_rotation(z, 2.0 * pi / n));
      gens.push_back(axis_rotation(Eigen::Vector3d::UnitX(), pi));
      break;
    case GroupKind::tetrahedral:
      gens.push_back(axis_rotation(z, pi));
      gens.push_back(axis_rotation(diag, 2.0 * pi / 3.0));
      n = 0;
      break;
    case GroupKind::octahedral:
      gens.push_back(axis_rotation(z, pi / 2.0));
      gens.push_back(axis_rotation(diag, 2.0 * pi / 3.0));
      n = 0;
      break;
    case GroupKind::icosahedral:
      gens.push_back(axis_rotation(Eigen::Vector3d(0.0, kTau, 1.0), 2.0 * pi / 5.0));
      gens.push_back(axis_rotation(diag, 2.0 * pi / 3.0));
      n = 0;
      break;
    case GroupKind::other:
      throw std::invalid_argument("generate_group: no canonical generators for this kind");
  }
  const std::size_t want = expected_order(kind, n);
  auto els = close_under_product(gens, want);
  if (els.size() != want) throw std::logic_error("generate_group: closure has unexpected order");
  return RotationGroup(kind, n, std::move(els));
}

RotationGroup generate_group(const std::string& tag) {
  std::string t;
  for (char c : tag)
    if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::toupper(c)));
  if (t == "T") return generate_group(GroupKind::tetrahedral);
  if (t == "O") return generate_group(GroupKind::octahedral);
  if (t == "I") return generate_group(GroupKind::icosahedral);
  if (t.size() >= 2 && (t[0] == 'C' || t[0] == 'D')) {
    const std::string digits = t.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int n = std::stoi(digits);
      return generate_group(t[0] == 'C' ? GroupKind::cyclic : GroupKind::dihedral, n);
    }
  }
  throw std::invalid_argument("generate_group: unknown group tag '" + tag + "'");
}

RotationGroup cyclic_group(int n, const Eigen::Vector3d& axis) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n >= 1 required");
  std::vector<Eigen::Matrix3d> gens{axis_rotation(axis, 2.0 * std::numbers::pi / n)};
  auto els = close_under_product(gens, static_cast<std::size_t>(n));
  if (els.size() != static_cast<std::size_t>(n)) throw std::logic_error("cyclic_group: unexpected order");
  return RotationGroup(GroupKind::cyclic, n, std::move(els));
}

bool contains_point(std::span<const BlochVector> points, const Eigen::Vector3d& v, double tol) {
  return std::any_of(points.begin(), points.end(), [&](const BlochVector& p) { return (p.vec() - v).norm() < tol; });
}

std::vector<BlochVector> orbit(const RotationGroup& g, const BlochVector& v) {
  std::vector<BlochVector> pts;
  for (const auto& m : g.elements()) {
    Eigen::Vector3d p = m * v.vec();
    if (!contains_point(pts, p, kPointTolerance)) pts.push_back(BlochVector::normalized(p));
  }
  std::sort(pts.begin(), pts.end(),
            [](const BlochVector& a, const BlochVector& b) { return rounded_key(a.vec()) < rounded_key(b.vec()); });
  return pts;
}

RotationGroup stabilizer(const RotationGroup& g, const BlochVector& v) {
  std::vector<Eigen::Matrix3d> els;
  for (const auto& m : g.elements())
    if ((m * v.vec() - v.vec()).norm() < kPointTolerance) els.push_back(m);
  const int n = static_cast<int>(els.size());
  return RotationGroup(GroupKind::cyclic, n, std::move(els));
}

DoubleCosetProfile double_coset_profile(const RotationGroup& g, const BlochVector& v) {
  const std::size_t order = g.order();
  std::vector<std::size_t> k_idx;
  for (std::size_t i = 0; i < order; ++i)
    if ((g[i] * v.vec() - v.vec()).norm() < kPointTolerance) k_idx.push_back(i);

  std::vector<int> coset_of(order, -1);
  std::vector<std::vector<std::size_t>> cosets;
  for (std::size_t i = 0; i < order; ++i) {
    if (coset_of[i] >= 0) continue;
    std::vector<std::size_t> members;
    for (std::size_t a : k_idx) {
      const std::size_t ag = g.product_index(a, i);
      for (std::size_t b : k_idx) {
        const std::size_t agb = g.product_index(ag, b);
        if (coset_of[agb] < 0) {
          coset_of[agb] = static_cast<int>(cosets.size());
          members.push_back(agb);
        }
      }
    }
    cosets.push_back(std::move(members));
  }

  DoubleCosetProfile prof;
  std::vector<double> level;
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    const std::size_t rep = cosets[c].front();
    if (coset_of[g.inverse_index(rep)] == static_cast<int>(c))
      ++prof.strict_n_s;
    else
      ++prof.strict_n_a;
    prof.coset_sizes.push_back(cosets[c].size());
    level.push_back((g[rep] * v.vec()).dot(v.vec()));
  }
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    const auto shared = std::count_if(level.begin(), level.end(), [&](double x) { return std::abs(x - level[c]) < 1e-9; });
    if (shared == 1)
      ++prof.n_s;
    else
      ++prof.n_a;
  }
  prof.n_v = prof.n_s + prof.n_a / 2.0;
  for (const auto& m : g.elements()) {
    if ((m * v.vec() + v.vec()).norm() < kPointTolerance) {
      prof.antipodal_in_orbit = true;
      break;
    }
  }
  return prof;
}

int degree_bound(const DoubleCosetProfile& profile, int orbit_size, int stabilizer_order) {
  if (stabilizer_order < 1 || orbit_size < 1) throw std::invalid_argument("degree_bound: counts must be positive");
  const int lead = profile.antipodal_in_orbit ? orbit_size - 2 : orbit_size - 1;
  return lead / stabilizer_order + profile.n_s - 1;
}

RotationGroup rotation_symmetry_group(std::span<const BlochVector> points) {
  if (points.size() < 2) throw std::invalid_argument("rotation_symmetry_group: need at least two points");
  const Eigen::Vector3d a = points[0].vec();
  // second anchor: the point least parallel to the first
  std::size_t bi = 0;
  double best = 2.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double c = std::abs(a.dot(points[i].vec()));
    if (c < best) {
      best = c;
      bi = i;
    }
  }
  if (best > 1.0 - 1e-9) throw std::invalid_argument("rotation_symmetry_group: collinear point set has infinite symmetry");
  const Eigen::Vector3d b = points[bi].vec();
  const double ab = a.dot(b);

  auto frame = [](const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
    Eigen::Matrix3d f;
    const Eigen::Vector3d e1 = p.normalized();
    const Eigen::Vector3d e3 = p.cross(q).normalized();
    f.col(0) = e1;
    f.col(1) = e3.cross(e1);
    f.col(2) = e3;
    return f;
  };
  const Eigen::Matrix3d src = frame(a, b);

  std::vector<Eigen::Matrix3d> els;
  for (const auto& pa : points) {
    for (const auto& pb : points) {
      if (std::abs(pa.dot(pb) - ab) > 1e-9) continue;
      const Eigen::Matrix3d r = frame(pa.vec(), pb.vec()) * src.transpose();
      bool maps = true;
      for (const auto& p : points) {
        if (!contains_point(points, r * p.vec(), 1e-7)) {
          maps = false;
          break;
        }
      }
      if (!maps) continue;
      const Eigen::Matrix3d rs = snap_algebraic(r);
      if (std::none_of(els.begin(), els.end(), [&](const Eigen::Matrix3d& e) { return same_matrix(e, rs); }))
        els.push_back(rs);
    }
  }
  return RotationGroup(GroupKind::other, 0, std::move(els));
}

}  // namespace povm
