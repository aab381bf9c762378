#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "lgfano/rational.hpp"

namespace lgfano {

// Arbitrary-precision real backed by mpfr. Every value carries its own
// precision in bits (>= 64); binary operations produce results at the larger
// of the two operand precisions. Rounding is to nearest throughout.
class Real {
 public:
  static constexpr mpfr_prec_t kMinPrec = 64;

  Real() { mpfr_init2(v_, kMinPrec); mpfr_set_zero(v_, 1); }
  Real(long v) { mpfr_init2(v_, kMinPrec); mpfr_set_si(v_, v, MPFR_RNDN); }  // NOLINT: scalar semantics
  Real(int v) : Real(static_cast<long>(v)) {}
  Real(double d, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(long i, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Integer& z, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real zero(mpfr_prec_t prec) {
    Real r = uninit(clamp(prec));
    mpfr_set_zero(r.v_, 1);
    return r;
  }

  static Real from_string(const std::string& s, mpfr_prec_t prec) {
    Real r = uninit(clamp(prec));
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && s != "nan")
      throw std::invalid_argument("bad real literal: " + s);
    return r;
  }

  // 2^e, exact.
  static Real two_pow(long e, mpfr_prec_t prec) {
    Real r = uninit(clamp(prec));
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r = uninit(clamp(prec));
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Decimal string: sign, leading digit, fraction with trailing zeros trimmed,
  // then "e<exp>". digits10 == 0 means enough digits to round-trip.
  std::string str(size_t digits10 = 0) const;

  friend Real operator+(const Real& a, const Real& b) {
    Real r = uninit(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r = uninit(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r = uninit(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r = uninit(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r = uninit(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator*(const Real& a, long b) {
    Real r = uninit(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b) {
    Real r = uninit(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& a) {
    Real r = uninit(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r = uninit(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  // positive real k-th root
  friend Real rootn(const Real& a, unsigned long k) {
    Real r = uninit(a.precision());
    mpfr_rootn_ui(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r = uninit(join(a, b));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real atan2(const Real& y, const Real& x) {
    Real r = uninit(join(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real cos(const Real& a) {
    Real r = uninit(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sin(const Real& a) {
    Real r = uninit(a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow_si(const Real& a, long e) {
    Real r = uninit(a.precision());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return (a >= b) ? a : b; }
  friend Real min(const Real& a, const Real& b) { return (a <= b) ? a : b; }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }
  static mpfr_prec_t join(const Real& a, const Real& b) {
    mpfr_prec_t pa = mpfr_get_prec(a.v_), pb = mpfr_get_prec(b.v_);
    return pa > pb ? pa : pb;
  }
  static Real uninit(mpfr_prec_t prec) {
    Real r;
    mpfr_set_prec(r.v_, prec);
    return r;
  }

  mpfr_t v_;
};

}  // namespace lgfano
