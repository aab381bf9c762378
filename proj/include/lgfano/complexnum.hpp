#pragma once

#include <string>

#include "lgfano/real.hpp"

namespace lgfano {

// Complex number over Real. Precision is carried per component and joined by
// arithmetic the same way Real does.
class Complex {
 public:
  Complex() = default;
  Complex(long v) : re_(v) {}  // NOLINT: scalar semantics
  Complex(int v) : re_(v) {}   // NOLINT
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(Real re) : re_(std::move(re)), im_(Real::zero(re_.precision())) {}
  Complex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
  Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(Real::zero(prec)) {}
  Complex(const Rational& re, mpfr_prec_t prec) : re_(re, prec), im_(Real::zero(prec)) {}

  static Complex zero(mpfr_prec_t prec) { return Complex(Real::zero(prec), Real::zero(prec)); }
  static Complex one(mpfr_prec_t prec) { return Complex(Real(1L, prec), Real::zero(prec)); }

  // exp(2*pi*i * r / m)
  static Complex root_of_unity(long r, long m, mpfr_prec_t prec) {
    Real theta = Real(2L * r, prec) * Real::pi(prec) / m;
    return Complex(cos(theta), sin(theta));
  }
  static Complex from_polar(const Real& modulus, const Real& angle) {
    return Complex(modulus * cos(angle), modulus * sin(angle));
  }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  Real& real() { return re_; }
  Real& imag() { return im_; }

  mpfr_prec_t precision() const {
    return re_.precision() > im_.precision() ? re_.precision() : im_.precision();
  }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  Complex operator-() const { return Complex(-re_, -im_); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real den = b.re_ * b.re_ + b.im_ * b.im_;
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / den,
                   (a.im_ * b.re_ - a.re_ * b.im_) / den);
  }
  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
  Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

  friend Complex operator*(const Complex& a, const Real& s) {
    return Complex(a.re_ * s, a.im_ * s);
  }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator*(const Complex& a, long s) { return Complex(a.re_ * s, a.im_ * s); }
  friend Complex operator*(long s, const Complex& a) { return a * s; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  friend Complex conj(const Complex& a) { return Complex(a.re_, -a.im_); }
  friend Real real(const Complex& a) { return a.re_; }
  friend Real imag(const Complex& a) { return a.im_; }
  friend Real abs(const Complex& a) { return hypot(a.re_, a.im_); }
  friend Real abs2(const Complex& a) { return a.re_ * a.re_ + a.im_ * a.im_; }
  friend Real norm2(const Complex& a) { return a.re_ * a.re_ + a.im_ * a.im_; }
  friend Real arg(const Complex& a) { return atan2(a.im_, a.re_); }

  // integer power by binary exponentiation; e may be negative
  friend Complex pow_si(const Complex& a, long e) {
    mpfr_prec_t prec = a.precision();
    if (e == 0) return Complex::one(prec);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    Complex base = a, acc = Complex::one(prec);
    while (n > 0) {
      if (n & 1ul) acc *= base;
      base *= base;
      n >>= 1;
    }
    return invert ? Complex::one(prec) / acc : acc;
  }

  std::string str(size_t digits10 = 0) const {
    return re_.str(digits10) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str(digits10) + "i";
  }

 private:
  Real re_, im_;
};

}  // namespace lgfano
