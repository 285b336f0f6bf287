#pragma once

// Closed real intervals with MPFR endpoints and outward (directed) rounding.
// Every operation returns an interval guaranteed to contain the exact result.

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "povm/qsqrt5.hpp"

namespace povm {

class Interval {
 public:
  /// Working precision (bits) for newly created intervals on this thread.
  static mpfr_prec_t precision();
  static void set_precision(mpfr_prec_t bits);

  Interval();
  Interval(long n);  // NOLINT(google-explicit-constructor)
  explicit Interval(const mpq_class& q);
  explicit Interval(const QSqrt5& x);
  /// Degenerate interval at a double (exact).
  static Interval from_double(double x);
  static Interval hull(const Interval& a, const Interval& b);

  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  double lower() const;
  double upper() const;
  double mid() const;
  double width() const;
  bool contains_zero() const;
  bool is_exact_zero() const;
  /// +1 / -1 when the interval excludes 0, 0 for the exact zero interval;
  /// throws AmbiguousSign otherwise.
  int sign() const;
  std::string to_string(int digits = 20) const;

  Interval operator-() const;
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  /// Throws AmbiguousSign when the divisor contains 0.
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  /// artanh(x) = (1/2) ln((1+x)/(1-x)) for |x| < 1.
  friend Interval atanh(const Interval& x);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval atanh(const Interval& x);
Interval pow(const Interval& x, int n);

/// RAII precision override.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits) : saved_(Interval::precision()) { Interval::set_precision(bits); }
  ~PrecisionScope() { Interval::set_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace povm
