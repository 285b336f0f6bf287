#include "povm/interval.hpp"

#include <sstream>
#include <stdexcept>

#include "povm/errors.hpp"

namespace povm {

namespace {

thread_local mpfr_prec_t g_precision = 200;

// RAII scratch value at the working precision of `like`.
struct Scratch {
  mpfr_t v;
  explicit Scratch(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Scratch() { mpfr_clear(v); }
};

}  // namespace

mpfr_prec_t Interval::precision() { return g_precision; }

void Interval::set_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20) throw std::invalid_argument("Interval: unsupported precision");
  g_precision = bits;
}

Interval::Interval() {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long n) {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
  mpfr_set_si(lo_, n, MPFR_RNDD);
  mpfr_set_si(hi_, n, MPFR_RNDU);
}

Interval::Interval(const mpq_class& q) {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const QSqrt5& x) : Interval(x.rational_part()) {
  if (sgn(x.sqrt5_part()) != 0) *this += Interval(x.sqrt5_part()) * sqrt(Interval(5));
}

Interval Interval::from_double(double x) {
  Interval r;
  mpfr_set_d(r.lo_, x, MPFR_RNDD);
  mpfr_set_d(r.hi_, x, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(a);
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval() {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
  Scratch s(mpfr_get_prec(lo_) + 1);
  mpfr_add(s.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(s.v, s.v, 1, MPFR_RNDN);
  return mpfr_get_d(s.v, MPFR_RNDN);
}

double Interval::width() const {
  Scratch s(mpfr_get_prec(lo_));
  mpfr_sub(s.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(s.v, MPFR_RNDU);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (is_exact_zero()) return 0;
  throw AmbiguousSign("interval " + to_string(8) + " contains zero");
}

std::string Interval::to_string(int digits) const {
  auto fmt = [digits](const mpfr_t x, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    std::string spec = "%." + std::to_string(digits) + "R" + (rnd == MPFR_RNDD ? "D" : "U") + "e";
    mpfr_asprintf(&buf, spec.c_str(), x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  };
  return "[" + fmt(lo_, MPFR_RNDD) + ", " + fmt(hi_, MPFR_RNDU) + "]";
}

Interval Interval::operator-() const {
  Interval r(*this);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Scratch t(mpfr_get_prec(lo_));
  mpfr_sub(t.v, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  mpfr_swap(lo_, t.v);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  const mpfr_prec_t p = mpfr_get_prec(lo_);
  Scratch lo(p), hi(p), t(p);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  mpfr_mul(lo.v, a[0], b[0], MPFR_RNDD);
  mpfr_mul(hi.v, a[0], b[0], MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      mpfr_mul(t.v, a[i], b[j], MPFR_RNDD);
      mpfr_min(lo.v, lo.v, t.v, MPFR_RNDD);
      mpfr_mul(t.v, a[i], b[j], MPFR_RNDU);
      mpfr_max(hi.v, hi.v, t.v, MPFR_RNDU);
    }
  }
  mpfr_swap(lo_, lo.v);
  mpfr_swap(hi_, hi.v);
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw AmbiguousSign("interval division by " + o.to_string(8));
  const mpfr_prec_t p = mpfr_get_prec(lo_);
  Scratch lo(p), hi(p), t(p);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  mpfr_div(lo.v, a[0], b[0], MPFR_RNDD);
  mpfr_div(hi.v, a[0], b[0], MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      mpfr_div(t.v, a[i], b[j], MPFR_RNDD);
      mpfr_min(lo.v, lo.v, t.v, MPFR_RNDD);
      mpfr_div(t.v, a[i], b[j], MPFR_RNDU);
      mpfr_max(hi.v, hi.v, t.v, MPFR_RNDU);
    }
  }
  mpfr_swap(lo_, lo.v);
  mpfr_swap(hi_, hi.v);
  return *this;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi_) < 0) throw DomainError("interval sqrt of a negative interval");
  Interval r(x);
  if (mpfr_sgn(x.lo_) < 0)
    mpfr_set_zero(r.lo_, 1);
  else
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw AmbiguousSign("interval log of " + x.to_string(8) + " (not strictly positive)");
  Interval r(x);
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval atanh(const Interval& x) {
  // monotone on (-1, 1)
  Interval r(x);
  mpfr_atanh(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_atanh(r.hi_, x.hi_, MPFR_RNDU);
  if (!mpfr_number_p(r.lo_) || !mpfr_number_p(r.hi_)) throw DomainError("interval atanh outside (-1, 1)");
  return r;
}

Interval pow(const Interval& x, int n) {
  if (n < 0) return Interval(1) / pow(x, -n);
  Interval r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace povm
