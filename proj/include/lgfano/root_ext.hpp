#pragma once

#include <string>
#include <vector>

#include "lgfano/complexnum.hpp"
#include "lgfano/rational.hpp"

namespace lgfano {

// Exact element of Q[t]/(t^m - c), stored as the coefficient vector of
// 1, t, ..., t^(m-1). No irreducibility is assumed: equality and zero tests
// are componentwise, which is all the chart analysis needs. An element with
// m == 1 acts as a plain rational scalar and combines with any ring.
class RootExt {
 public:
  RootExt() : coef_{Rational(0)}, radicand_(0) {}
  RootExt(int v) : coef_{Rational(v)}, radicand_(0) {}  // NOLINT: scalar semantics
  RootExt(Rational v) : coef_{std::move(v)}, radicand_(0) {}  // NOLINT
  RootExt(std::vector<Rational> coef, Rational radicand)
      : coef_(std::move(coef)), radicand_(std::move(radicand)) {
    if (coef_.empty()) throw std::invalid_argument("empty ring element");
    reduce_scalar();
  }

  // the generator t of Q[t]/(t^m - c); for m == 1 this is the scalar c itself
  static RootExt generator(size_t m, const Rational& c) {
    if (m == 0) throw std::invalid_argument("ring degree must be positive");
    if (m == 1) return RootExt(c);
    std::vector<Rational> v(m, Rational(0));
    v[1] = 1;
    return RootExt(std::move(v), c);
  }

  size_t degree() const { return coef_.size(); }
  const Rational& radicand() const { return radicand_; }
  const std::vector<Rational>& coefficients() const { return coef_; }
  bool is_scalar() const { return coef_.size() == 1; }
  bool is_zero() const {
    for (const Rational& q : coef_)
      if (q != 0) return false;
    return true;
  }

  friend RootExt operator+(const RootExt& a, const RootExt& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < y.coef_.size(); ++i) x.coef_[i] += y.coef_[i];
    return x;
  }
  friend RootExt operator-(const RootExt& a, const RootExt& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < y.coef_.size(); ++i) x.coef_[i] -= y.coef_[i];
    return x;
  }
  RootExt operator-() const {
    RootExt r(*this);
    for (Rational& q : r.coef_) q = -q;
    return r;
  }
  friend RootExt operator*(const RootExt& a, const RootExt& b) {
    auto [x, y] = align(a, b);
    const size_t m = x.coef_.size();
    std::vector<Rational> prod(2 * m - 1, Rational(0));
    for (size_t i = 0; i < m; ++i) {
      if (x.coef_[i] == 0) continue;
      for (size_t j = 0; j < m; ++j) {
        if (y.coef_[j] == 0) continue;
        prod[i + j] += x.coef_[i] * y.coef_[j];
      }
    }
    std::vector<Rational> red(m, Rational(0));
    for (size_t k = 0; k < prod.size(); ++k) {
      if (k < m)
        red[k] += prod[k];
      else
        red[k - m] += prod[k] * x.radicand_;  // t^m -> c
    }
    return RootExt(std::move(red), x.radicand_);
  }

  friend bool operator==(const RootExt& a, const RootExt& b) {
    auto [x, y] = align(a, b);
    return x.coef_ == y.coef_;
  }
  friend bool operator!=(const RootExt& a, const RootExt& b) { return !(a == b); }

  friend RootExt pow(const RootExt& a, unsigned long e) {
    RootExt acc(1), base(a);
    while (e > 0) {
      if (e & 1ul) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // numeric value with t -> phase * c^(1/m), the positive real root times a
  // caller-chosen phase (1 for the principal branch)
  Complex value_at_branch(const Complex& phase, mpfr_prec_t prec) const {
    Real root = rootn(Real(radicand_, prec), static_cast<unsigned long>(coef_.size()));
    Complex t = phase * root;
    Complex acc = Complex::zero(prec);
    for (size_t i = coef_.size(); i-- > 0;) acc = acc * t + Complex(coef_[i], prec);
    return acc;
  }

  // "p(t) mod t^m - c" for genuine extensions, plain rational for scalars
  std::string str() const;

 private:
  void reduce_scalar() {
    if (coef_.size() == 1) radicand_ = 0;
  }
  // promote scalars into the other operand's ring; reject mixed genuine rings
  static std::pair<RootExt, RootExt> align(const RootExt& a, const RootExt& b);

  std::vector<Rational> coef_;
  Rational radicand_;
};

inline bool coeff_is_zero(const RootExt& x) { return x.is_zero(); }
inline std::string coeff_str(const RootExt& x) { return x.str(); }

}  // namespace lgfano
