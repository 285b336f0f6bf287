#pragma once

// Exact arithmetic in the field Q(sqrt 5): numbers a + b sqrt(5) with
// rational a, b. Icosahedral coordinates, group entries and interpolation
// nodes all live here.

#include <optional>
#include <string>

#include <gmpxx.h>

namespace povm {

class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  QSqrt5(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  QSqrt5(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QSqrt5 sqrt5() { return QSqrt5(0, 1); }
  /// Golden ratio (1 + sqrt 5)/2.
  static QSqrt5 tau() { return QSqrt5(mpq_class(1, 2), mpq_class(1, 2)); }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt5_part() const { return b_; }

  QSqrt5 conjugate() const { return QSqrt5(a_, -b_); }
  /// Field norm a^2 - 5 b^2.
  mpq_class norm() const { return a_ * a_ - 5 * b_ * b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  /// Exact sign.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  QSqrt5 operator-() const { return QSqrt5(-a_, -b_); }
  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  /// Throws std::domain_error on division by zero.
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }
  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() < 0; }

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

/// Finds a + b sqrt 5 with denominators dividing `max_den` that equals x
/// within `tol`; nullopt when none exists. Used to lift snapped doubles
/// (group entries, dot products) back to exact values.
std::optional<QSqrt5> recognize_qsqrt5(double x, int max_den = 60, double tol = 1e-10);

}  // namespace povm
