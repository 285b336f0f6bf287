#pragma once

// Dense univariate polynomials over a coefficient ring T, ascending powers.
// T ranges over long double, mpq_class, QSqrt5 and Interval; the free
// functions coeff_is_zero / coeff_sign adapt each type.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "povm/interval.hpp"
#include "povm/qsqrt5.hpp"

namespace povm {

inline bool coeff_is_zero(long double x) { return x == 0.0L; }
inline bool coeff_is_zero(double x) { return x == 0.0; }
inline bool coeff_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool coeff_is_zero(const QSqrt5& x) { return x.is_zero(); }
inline bool coeff_is_zero(const Interval& x) { return x.is_exact_zero(); }

inline int coeff_sign(long double x) { return (x > 0) - (x < 0); }
inline int coeff_sign(double x) { return (x > 0) - (x < 0); }
inline int coeff_sign(const mpq_class& x) { return sgn(x); }
inline int coeff_sign(const QSqrt5& x) { return x.sign(); }
/// Throws AmbiguousSign for intervals straddling zero.
inline int coeff_sign(const Interval& x) { return x.sign(); }

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }
  /// Integer constant; lets generic formulas written for scalars run on polynomials.
  explicit Polynomial(long n) : c_{T(n)} { trim(); }
  static Polynomial constant(T a) { return Polynomial(std::vector<T>{std::move(a)}); }
  /// The monomial t.
  static Polynomial identity() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coefficient(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw std::logic_error("Polynomial: leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class U>
  U operator()(const U& t) const {
    U r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + U(*it);
    return r;
  }
  T operator()(const T& t) const {
    T r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> d;
    for (const auto& x : c_) d.push_back(-x);
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) { return constant(s) * p; }

  /// Euclidean division over a field; the divisor's leading coefficient must
  /// be invertible (for intervals: exclude zero).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    std::vector<T> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<T> q(static_cast<std::size_t>(degree() - dd + 1), T(0));
    for (int i = degree(); i >= dd; --i) {
      const T f = rem[i] / d.leading();
      q[i - dd] = f;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - f * d.c_[j];
      rem[i] = T(0);  // exact cancellation by construction
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

}  // namespace povm
