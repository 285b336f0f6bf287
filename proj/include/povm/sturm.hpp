#pragma once

// Sturm chains and real-root counting over an exact field (mpq_class,
// QSqrt5) or over intervals, where every sign must be decided unambiguously.

#include <optional>
#include <stdexcept>
#include <vector>

#include "povm/polynomial.hpp"

namespace povm {

/// q, q', -rem(q, q'), ... stopping before the first zero remainder.
/// Throws std::domain_error for the zero polynomial; interval coefficients may
/// raise AmbiguousSign when a leading coefficient cannot be separated from 0.
template <class T>
std::vector<Polynomial<T>> sturm_chain(const Polynomial<T>& q) {
  if (q.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
  std::vector<Polynomial<T>> chain{q};
  if (q.degree() == 0) return chain;
  chain.push_back(q.derivative());
  while (true) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    if (b.degree() == 0) break;
    coeff_sign(b.leading());  // a divisor with undecidable leading sign is fatal
    auto r = a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace detail {

inline int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Sign changes of the chain at +infinity (positive = true) or -infinity.
template <class T>
int sign_changes_at_infinity(const std::vector<Polynomial<T>>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& p : chain) {
    int sg = coeff_sign(p.leading());
    if (!positive && p.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return detail::count_changes(s);
}

template <class T>
int sign_changes_at(const std::vector<Polynomial<T>>& chain, const T& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(coeff_sign(p(x)));
  return detail::count_changes(s);
}

/// Number of distinct real roots of q in (a, b]; nullopt endpoints mean
/// -infinity / +infinity respectively.
template <class T>
int sturm_root_count(const Polynomial<T>& q, const std::optional<T>& a = std::nullopt,
                     const std::optional<T>& b = std::nullopt) {
  const auto chain = sturm_chain(q);
  const int va = a ? sign_changes_at(chain, *a) : sign_changes_at_infinity(chain, false);
  const int vb = b ? sign_changes_at(chain, *b) : sign_changes_at_infinity(chain, true);
  return va - vb;
}

}  // namespace povm
