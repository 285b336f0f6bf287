#include "povm/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>
#include "json.hpp"

#include "povm/errors.hpp"

namespace povm {

namespace {

constexpr double kTau = std::numbers::phi;
constexpr double kCentroidTolerance = 1e-10;

// Canonical seed and group of each polyhedral family.
struct PolySeed {
  GroupKind group;
  Eigen::Vector3d seed;
};

PolySeed poly_seed(Family f) {
  const double s3 = std::sqrt(3.0);
  switch (f) {
    case Family::tetrahedron: return {GroupKind::tetrahedral, Eigen::Vector3d(1, 1, 1) / s3};
    case Family::octahedron: return {GroupKind::octahedral, Eigen::Vector3d(0, 0, 1)};
    case Family::cube: return {GroupKind::octahedral, Eigen::Vector3d(1, 1, 1) / s3};
    case Family::cuboctahedron: return {GroupKind::octahedral, Eigen::Vector3d(0, 1, 1) / std::sqrt(2.0)};
    case Family::icosahedron: return {GroupKind::icosahedral, Eigen::Vector3d(0, kTau, 1) / std::sqrt(kTau + 2.0)};
    case Family::dodecahedron: return {GroupKind::icosahedral, Eigen::Vector3d(0, 1 / kTau, kTau) / s3};
    case Family::icosidodecahedron: return {GroupKind::icosahedral, Eigen::Vector3d(0, 0, 1)};
    default: break;
  }
  throw std::invalid_argument("poly_seed: not a polyhedral family");
}

// Cache canonical groups; generation is cheap but repeated often in tests.
std::shared_ptr<const RotationGroup> canonical_group(GroupKind kind, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const RotationGroup>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<const RotationGroup>(generate_group(kind, n));
  cache.emplace(key, g);
  return g;
}

// C_2 about the x axis swaps the poles.
std::shared_ptr<const RotationGroup> digon_group() {
  static const auto g = std::make_shared<const RotationGroup>(cyclic_group(2, Eigen::Vector3d::UnitX()));
  return g;
}

// Fiducial first, remaining orbit points in orbit() order.
std::vector<BlochVector> fiducial_first(std::vector<BlochVector> pts, const Eigen::Vector3d& seed) {
  auto it = std::find_if(pts.begin(), pts.end(), [&](const BlochVector& p) { return (p.vec() - seed).norm() < 1e-8; });
  if (it == pts.end()) throw std::logic_error("fiducial not in its own orbit");
  std::rotate(pts.begin(), it, it + 1);
  return pts;
}

Eigen::Vector3d centroid(std::span<const BlochVector> v) {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& b : v) c += b.vec();
  return c / static_cast<double>(v.size());
}

bool same_point_set(std::span<const BlochVector> a, std::span<const BlochVector> b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const BlochVector& p) { return contains_point(b, p.vec(), 1e-8); });
}

}  // namespace

HsPovm::HsPovm(std::vector<BlochVector> v, Family f, int n, double alpha, std::shared_ptr<const RotationGroup> g)
    : vectors_(std::move(v)), family_(f), n_(n), alpha_(alpha), group_(std::move(g)) {}

HsPovm HsPovm::custom(std::vector<BlochVector> vectors) {
  if (vectors.size() < 2) throw DomainError("custom POVM needs at least two vectors");
  if (centroid(vectors).norm() > kCentroidTolerance) throw DomainError("custom POVM: Bloch vectors do not sum to zero");
  auto g = transitive_symmetry_group(vectors);
  return HsPovm(std::move(vectors), Family::custom, 0, 0.0, std::move(g));
}

std::string HsPovm::name() const {
  if (family_ == Family::ngon) return std::to_string(n_) + "-gon";
  if (family_ == Family::rectangle) {
    std::ostringstream os;
    os << "rectangle(" << alpha_ << ")";
    return os.str();
  }
  return family_name(family_);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::digon: return "digon";
    case Family::ngon: return "ngon";
    case Family::tetrahedron: return "tetrahedron";
    case Family::octahedron: return "octahedron";
    case Family::cube: return "cube";
    case Family::cuboctahedron: return "cuboctahedron";
    case Family::icosahedron: return "icosahedron";
    case Family::dodecahedron: return "dodecahedron";
    case Family::icosidodecahedron: return "icosidodecahedron";
    case Family::custom: return "custom";
    case Family::rectangle: return "rectangle";
  }
  return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
  static const std::map<std::string, Family> names = {
      {"digon", Family::digon},
      {"ngon", Family::ngon},
      {"n-gon", Family::ngon},
      {"tetrahedron", Family::tetrahedron},
      {"octahedron", Family::octahedron},
      {"cube", Family::cube},
      {"cuboctahedron", Family::cuboctahedron},
      {"icosahedron", Family::icosahedron},
      {"dodecahedron", Family::dodecahedron},
      {"icosidodecahedron", Family::icosidodecahedron},
      {"custom", Family::custom},
      {"rectangle", Family::rectangle},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::vector<Family> hs_families() {
  return {Family::digon,        Family::tetrahedron,  Family::octahedron,
          Family::cube,         Family::cuboctahedron, Family::icosahedron,
          Family::dodecahedron, Family::icosidodecahedron};
}

HsPovm make_hs_povm(Family family, int n) {
  switch (family) {
    case Family::digon: {
      auto g = digon_group();
      std::vector<BlochVector> v{BlochVector(0, 0, 1), BlochVector(0, 0, -1)};
      return HsPovm(std::move(v), Family::digon, 2, 0.0, g);
    }
    case Family::ngon: {
      if (n < 2) throw std::invalid_argument("make_hs_povm: n-gon needs n >= 2");
      if (n == 2) return make_hs_povm(Family::digon);
      auto g = canonical_group(GroupKind::cyclic, n);
      std::vector<BlochVector> v;
      for (int j = 0; j < n; ++j) {
        const double a = 2.0 * std::numbers::pi * j / n;
        v.push_back(BlochVector::normalized(Eigen::Vector3d(std::cos(a), std::sin(a), 0.0)));
      }
      return HsPovm(std::move(v), Family::ngon, n, 0.0, g);
    }
    case Family::custom:
    case Family::rectangle:
      throw std::invalid_argument("make_hs_povm: '" + family_name(family) + "' is not a named family");
    default: break;
  }
  const PolySeed ps = poly_seed(family);
  auto g = canonical_group(ps.group, 0);
  auto pts = fiducial_first(orbit(*g, BlochVector(ps.seed)), ps.seed);
  return HsPovm(std::move(pts), family, 0, 0.0, g);
}

HsPovm make_hs_povm(const std::string& name) {
  if (auto f = parse_family(name)) {
    if (*f == Family::ngon) throw std::invalid_argument("make_hs_povm: n-gon needs an order, e.g. 'ngon:5'");
    return make_hs_povm(*f);
  }
  std::string digits;
  if (name.rfind("ngon:", 0) == 0) digits = name.substr(5);
  else if (name.size() > 4 && name.substr(name.size() - 4) == "-gon") digits = name.substr(0, name.size() - 4);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return make_hs_povm(Family::ngon, std::stoi(digits));
  throw std::invalid_argument("unknown POVM family '" + name + "'");
}

HsPovm make_rectangle_povm(double alpha) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi)) throw DomainError("rectangle angle must lie in (0, pi)");
  if (std::abs(alpha - std::numbers::pi / 2.0) < 1e-12) return make_hs_povm(Family::ngon, 4);
  const BlochVector v1(1, 0, 0);
  const BlochVector v2(std::cos(alpha), std::sin(alpha), 0.0);
  std::vector<BlochVector> v{v1, -v1, v2, -v2};
  auto g = transitive_symmetry_group(v);
  return HsPovm(std::move(v), Family::rectangle, 0, alpha, std::move(g));
}

std::shared_ptr<const RotationGroup> transitive_symmetry_group(std::span<const BlochVector> vectors) {
  if (vectors.size() < 2) return nullptr;
  bool collinear = true;
  for (const auto& p : vectors)
    if (std::abs(std::abs(p.dot(vectors[0])) - 1.0) > 1e-9) collinear = false;
  if (collinear) {
    // only an antipodal pair (or repeated points) can be symmetric here
    if (vectors.size() == 2 && vectors[0].dot(vectors[1]) < -1.0 + 1e-9) {
      const Eigen::Vector3d a = vectors[0].vec();
      Eigen::Vector3d perp = a.unitOrthogonal();
      return std::make_shared<const RotationGroup>(cyclic_group(2, perp));
    }
    return nullptr;
  }
  auto g = std::make_shared<const RotationGroup>(rotation_symmetry_group(vectors));
  const auto orb = orbit(*g, vectors[0]);
  if (orb.size() != vectors.size()) return nullptr;
  return g;
}

DesignReport validate_povm(std::span<const BlochVector> vectors) {
  DesignReport r;
  if (vectors.empty()) return r;
  r.centroid_norm = centroid(vectors).norm();
  r.is_povm = vectors.size() >= 2 && r.centroid_norm <= kCentroidTolerance;
  Eigen::Matrix<double, 3, Eigen::Dynamic> m(3, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vectors[j].vec();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > 1e-8) ++rank;
  r.informationally_complete = rank == 3;

  std::mt19937_64 rng(kDesignSeed);
  std::normal_distribution<double> nd;
  std::vector<double> worst(6, 0.0);
  const double k = static_cast<double>(vectors.size());
  for (int d = 0; d < kDesignDirections; ++d) {
    Eigen::Vector3d w(nd(rng), nd(rng), nd(rng));
    w.normalize();
    for (int s = 1; s <= 5; ++s) {
      double acc = 0.0;
      for (const auto& v : vectors) acc += std::pow(w.dot(v.vec()), s);
      const double target = (s % 2 == 1) ? 0.0 : 1.0 / (s + 1);
      worst[s] = std::max(worst[s], std::abs(acc / k - target));
    }
  }
  for (int s = 1; s <= 5; ++s) r.moment_values.emplace_back(s, worst[s]);
  r.design_order = 0;
  for (int s = 1; s <= 5 && worst[s] <= 1e-9; ++s) r.design_order = s;
  return r;
}

int spherical_design_order(std::span<const BlochVector> vectors, int t_max, std::uint64_t seed) {
  if (vectors.empty()) return 0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  const double k = static_cast<double>(vectors.size());
  int order = t_max;
  for (int d = 0; d < kDesignDirections && order > 0; ++d) {
    Eigen::Vector3d w(nd(rng), nd(rng), nd(rng));
    w.normalize();
    for (int s = 1; s <= order; ++s) {
      double acc = 0.0;
      for (const auto& v : vectors) acc += std::pow(w.dot(v.vec()), s);
      const double target = (s % 2 == 1) ? 0.0 : 1.0 / (s + 1);
      if (std::abs(acc / k - target) > 1e-9) {
        order = s - 1;
        break;
      }
    }
  }
  return order;
}

std::vector<double> interpolation_set(const HsPovm& povm) {
  std::vector<double> t;
  const BlochVector& v = povm.fiducial();
  for (const auto& u : povm.vectors()) t.push_back(std::clamp(-v.dot(u), -1.0, 1.0));
  std::sort(t.begin(), t.end());
  std::vector<double> out;
  for (double x : t)
    if (out.empty() || x - out.back() > 1e-9) out.push_back(x);
  // exact endpoints and zero where the geometry forces them
  for (double& x : out) {
    if (std::abs(x - 1.0) < 1e-12) x = 1.0;
    if (std::abs(x + 1.0) < 1e-12) x = -1.0;
    if (std::abs(x) < 1e-12) x = 0.0;
  }
  return out;
}

std::string povm_to_json(const HsPovm& povm) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["family"] = povm.family() == Family::ngon ? povm.name() : family_name(povm.family());
  if (povm.family() == Family::rectangle) j["alpha"] = povm.alpha();
  if (!povm.group_tag().empty()) j["group"] = povm.group_tag();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : povm.vectors()) arr.push_back({v.x(), v.y(), v.z()});
  j["vectors"] = arr;
  return j.dump(2) + "\n";
}

HsPovm povm_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("POVM JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vectors") || !j["vectors"].is_array())
    throw std::invalid_argument("POVM JSON: expected an object with a 'vectors' array");
  std::vector<BlochVector> vecs;
  for (const auto& row : j["vectors"]) {
    if (!row.is_array() || row.size() != 3) throw std::invalid_argument("POVM JSON: each vector needs 3 coordinates");
    vecs.emplace_back(row[0].get<double>(), row[1].get<double>(), row[2].get<double>());
  }
  const std::string fam = j.value("family", std::string("custom"));
  if (fam == "rectangle" && j.contains("alpha")) {
    HsPovm r = make_rectangle_povm(j["alpha"].get<double>());
    if (same_point_set(r.vectors(), vecs)) return r;
  } else if (fam != "custom") {
    try {
      HsPovm named = make_hs_povm(fam);
      if (same_point_set(named.vectors(), vecs) && (named.fiducial().vec() - vecs.front().vec()).norm() < 1e-8)
        return named;
    } catch (const std::invalid_argument&) {
      // unknown tag: fall through to custom
    }
  }
  return HsPovm::custom(std::move(vecs));
}

HsPovm load_povm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open POVM file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return povm_from_json(ss.str());
}

}  // namespace povm
