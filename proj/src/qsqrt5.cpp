#include "povm/qsqrt5.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace povm {

int QSqrt5::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 5 b^2
  const int c = cmp(mpq_class(a_ * a_), mpq_class(5 * b_ * b_));
  if (c == 0) return 0;  // unreachable for rational a, b (sqrt 5 irrational)
  return c > 0 ? sa : sb;
}

double QSqrt5::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(5.0); }

std::string QSqrt5::to_string() const {
  std::ostringstream os;
  os << a_.get_str();
  if (sgn(b_) != 0) os << (sgn(b_) > 0 ? " + " : " - ") << mpq_class(abs(b_)).get_str() << "*sqrt(5)";
  return os.str();
}

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  mpq_class a = a_ * o.a_ + 5 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  const mpq_class n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("QSqrt5: division by zero");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::optional<QSqrt5> recognize_qsqrt5(double x, int max_den, double tol) {
  const double s5 = std::sqrt(5.0);
  // search b = q / den over small numerators; a is then forced
  for (int den = 1; den <= max_den; ++den) {
    if (max_den % den != 0) continue;
    for (int q = 0; q <= 4 * den; ++q) {
      for (int sgnb : {1, -1}) {
        if (q == 0 && sgnb < 0) continue;
        const double b = sgnb * static_cast<double>(q) / den;
        const double a = x - b * s5;
        const double ad = std::round(a * max_den);
        if (std::abs(a * max_den - ad) < tol * max_den) {
          mpq_class qa(static_cast<long>(ad), max_den);
          mpq_class qb(sgnb * q, den);
          QSqrt5 r(qa, qb);
          if (std::abs(r.to_double() - x) < tol) return r;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace povm
