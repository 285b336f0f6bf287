#include "povm/dynamics.hpp"

#include <cmath>
#include <string>

#include "povm/entropy.hpp"
#include "povm/errors.hpp"
#include "povm/symmetry.hpp"

namespace povm {

namespace {

void check_budget(int k, int length) {
  if (length < 1) throw DomainError("sequence length must be at least 1");
  if (std::pow(static_cast<double>(k), length) > kEnumerationBudget)
    throw DomainError("enumeration budget exceeded: k^" + std::to_string(length) + " > 1e7");
}

// Entropies of the length-1..depth sequence distributions from the uniform start.
std::vector<double> enumerate_entropies(const Eigen::MatrixXd& p, int depth) {
  const Eigen::Index k = p.rows();
  std::vector<long double> h(static_cast<std::size_t>(depth) + 1, 0.0L);
  auto rec = [&](auto&& self, Eigen::Index last, long double prob, int len) -> void {
    h[static_cast<std::size_t>(len)] += eta_ld(prob);
    if (len == depth) return;
    for (Eigen::Index j = 0; j < k; ++j) {
      const long double q = prob * p(last, j);
      if (q > 0.0L) self(self, j, q, len + 1);
    }
  };
  for (Eigen::Index i = 0; i < k; ++i) rec(rec, i, 1.0L / k, 1);
  return {h.begin(), h.end()};
}

}  // namespace

UnitaryAsRotation::UnitaryAsRotation(const Eigen::Matrix3d& r) : r_(r) {
  if ((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > kTolerance ||
      std::abs(r.determinant() - 1.0) > kTolerance)
    throw DomainError("UnitaryAsRotation: matrix is not a proper rotation");
}

UnitaryAsRotation UnitaryAsRotation::axis_angle(const Eigen::Vector3d& axis, double angle) {
  return UnitaryAsRotation(axis_rotation(axis, angle));
}

Eigen::MatrixXd transition_matrix(const UnitaryAsRotation& r, const HsPovm& povm) {
  const auto& vs = povm.vectors();
  const int k = povm.size();
  Eigen::MatrixXd p(k, k);
  for (int i = 0; i < k; ++i) {
    const Eigen::Vector3d ri = r.matrix() * vs[static_cast<std::size_t>(i)].vec();
    for (int j = 0; j < k; ++j) p(i, j) = std::max(0.0, (1.0 + ri.dot(vs[static_cast<std::size_t>(j)].vec())) / k);
  }
  return p;
}

double dynamical_entropy(const UnitaryAsRotation& r, const HsPovm& povm) {
  const Eigen::MatrixXd p = transition_matrix(r, povm);
  long double s = 0.0L;
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j) s += eta_ld(p(i, j));
  return static_cast<double>(s / p.rows());
}

double measurement_entropy(const HsPovm& povm) {
  long double s = 0.0L;
  for (const auto& v : povm.vectors()) s += entropy_at(v, povm);
  return static_cast<double>(s / povm.size());
}

double sequence_probability(const Eigen::Vector3d& rho, const UnitaryAsRotation& r, const HsPovm& povm,
                            const std::vector<int>& sequence) {
  const int k = povm.size();
  for (int i : sequence)
    if (i < 1 || i > k) throw DomainError("sequence_probability: outcome index outside [1, k]");
  if (sequence.empty()) return 1.0;
  const auto first = outcome_probabilities(rho, povm);
  const Eigen::MatrixXd p = transition_matrix(r, povm);
  double prob = first[static_cast<std::size_t>(sequence.front() - 1)];
  for (std::size_t m = 0; m + 1 < sequence.size(); ++m) prob *= p(sequence[m] - 1, sequence[m + 1] - 1);
  return prob;
}

double sequence_entropy(const UnitaryAsRotation& r, const HsPovm& povm, int n) {
  check_budget(povm.size(), n);
  return enumerate_entropies(transition_matrix(r, povm), n)[static_cast<std::size_t>(n)];
}

double empirical_entropy_rate(const UnitaryAsRotation& r, const HsPovm& povm, int n) {
  if (n < 1) throw DomainError("entropy rate needs n >= 1");
  check_budget(povm.size(), n + 1);
  const auto h = enumerate_entropies(transition_matrix(r, povm), n + 1);
  return h[static_cast<std::size_t>(n) + 1] - h[static_cast<std::size_t>(n)];
}

}  // namespace povm
