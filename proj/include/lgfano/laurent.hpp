#pragma once

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgfano/complexnum.hpp"
#include "lgfano/eigen_support.hpp"
#include "lgfano/exponents.hpp"
#include "lgfano/rational.hpp"

namespace lgfano {

inline bool coeff_is_zero(const Rational& q) { return q == 0; }
inline std::string coeff_str(const Rational& q) { return to_string(q); }

// Sparse multivariate Laurent polynomial over an exact coefficient ring.
// Terms are kept in canonical graded-lex descending order with no zero
// coefficients; all values are immutable in spirit (operations return new
// polynomials). Coeff must provide +, *, unary -, ==, construction from int,
// and coeff_is_zero / coeff_str overloads.
template <class Coeff>
class Laurent {
 public:
  using Term = std::pair<ExponentVector, Coeff>;

  Laurent() : nvars_(0) {}
  explicit Laurent(int nvars, std::vector<std::string> var_names = {})
      : nvars_(nvars), names_(std::move(var_names)) {
    if (names_.empty())
      for (int i = 1; i <= nvars; ++i) names_.push_back("v" + std::to_string(i));
    if (static_cast<int>(names_.size()) != nvars)
      throw std::invalid_argument("variable name count mismatch");
  }

  static Laurent constant(Coeff c, int nvars, std::vector<std::string> var_names = {}) {
    Laurent p(nvars, std::move(var_names));
    if (!coeff_is_zero(c)) p.terms_.emplace_back(ExponentVector(static_cast<size_t>(nvars)), std::move(c));
    return p;
  }

  static Laurent monomial(Coeff c, ExponentVector e, std::vector<std::string> var_names = {}) {
    Laurent p(static_cast<int>(e.size()), std::move(var_names));
    if (!coeff_is_zero(c)) p.terms_.emplace_back(std::move(e), std::move(c));
    return p;
  }

  // variable x_i as a polynomial
  static Laurent variable(size_t i, int nvars, std::vector<std::string> var_names = {}) {
    ExponentVector e(static_cast<size_t>(nvars));
    e[i] = 1;
    return monomial(Coeff(1), std::move(e), std::move(var_names));
  }

  int nvars() const { return nvars_; }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const ExponentVector& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const ExponentVector& key) {
                                 return GradedLexGreater()(t.first, key);
                               });
    if (it != terms_.end() && it->first == e) return it->second;
    return Coeff(0);
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    a.check_compatible(b);
    Laurent r(a.nvars_, a.names_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    GradedLexGreater gt;
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      if (a.terms_[i].first == b.terms_[j].first) {
        Coeff c = a.terms_[i].second + b.terms_[j].second;
        if (!coeff_is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i, ++j;
      } else if (gt(a.terms_[i].first, b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else {
        r.terms_.push_back(b.terms_[j++]);
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  Laurent operator-() const {
    Laurent r(nvars_, names_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.emplace_back(t.first, -t.second);
    return r;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) { return mul(a, b); }

  friend Laurent operator*(const Coeff& c, const Laurent& p) {
    Laurent r(p.nvars_, p.names_);
    if (coeff_is_zero(c)) return r;
    r.terms_.reserve(p.terms_.size());
    for (const Term& t : p.terms_) {
      Coeff v = c * t.second;
      if (!coeff_is_zero(v)) r.terms_.emplace_back(t.first, std::move(v));
    }
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Hash-accumulated sparse convolution; exact zeros pruned, result canonical.
  friend Laurent mul(const Laurent& a, const Laurent& b) {
    a.check_compatible(b);
    std::unordered_map<ExponentVector, Coeff, ExponentVectorHash> acc;
    acc.reserve(a.terms_.size() * 2 + b.terms_.size());
    for (const Term& s : a.terms_)
      for (const Term& t : b.terms_) {
        ExponentVector e = s.first + t.first;
        Coeff v = s.second * t.second;
        auto [it, fresh] = acc.try_emplace(std::move(e), v);
        if (!fresh) it->second = it->second + v;
      }
    return from_accumulator(std::move(acc), a.nvars_, a.names_);
  }

  friend Laurent pow(const Laurent& p, unsigned long m) {
    Laurent acc = constant(Coeff(1), p.nvars_, p.names_);
    Laurent base = p;
    while (m > 0) {
      if (m & 1ul) acc = mul(acc, base);
      m >>= 1;
      if (m > 0) base = mul(base, base);
    }
    return acc;
  }

  friend Laurent partial_derivative(const Laurent& p, size_t var_index) {
    if (var_index >= static_cast<size_t>(p.nvars_))
      throw std::out_of_range("derivative variable index out of range");
    std::unordered_map<ExponentVector, Coeff, ExponentVectorHash> acc;
    for (const Term& t : p.terms_) {
      int32_t e = t.first[var_index];
      if (e == 0) continue;
      acc.emplace(t.first.shifted(var_index, -1), t.second * Coeff(e));
    }
    return from_accumulator(std::move(acc), p.nvars_, p.names_);
  }

  friend Coeff constant_term(const Laurent& p) {
    return p.coefficient(ExponentVector(static_cast<size_t>(p.nvars_)));
  }

  // `coeff * x^e y^e` terms joined by ` + `, graded-lex descending.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
      if (!first) os << " + ";
      first = false;
      os << coeff_str(t.second);
      for (size_t i = 0; i < t.first.size(); ++i)
        if (t.first[i] != 0) os << (i == first_nonzero(t.first) ? " * " : " ")
                                << names_[i] << "^" << t.first[i];
    }
    return os.str();
  }

 private:
  static size_t first_nonzero(const ExponentVector& e) {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) return i;
    return e.size();
  }

  void check_compatible(const Laurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  }

  static Laurent from_accumulator(
      std::unordered_map<ExponentVector, Coeff, ExponentVectorHash>&& acc, int nvars,
      const std::vector<std::string>& names) {
    Laurent r(nvars, names);
    r.terms_.reserve(acc.size());
    for (auto& kv : acc)
      if (!coeff_is_zero(kv.second)) r.terms_.emplace_back(kv.first, std::move(kv.second));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return GradedLexGreater()(x.first, y.first); });
    return r;
  }

  int nvars_;
  std::vector<std::string> names_;
  std::vector<Term> terms_;
};

using LaurentPoly = Laurent<Rational>;

LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names);

// ---- numeric evaluation (exact-rational polynomials only) ----

// Throws std::domain_error when a coordinate is zero while the polynomial
// carries a negative exponent for that variable.
Complex evaluate(const LaurentPoly& p, std::span<const Complex> point, mpfr_prec_t precision_bits);
VectorXc gradient_at(const LaurentPoly& p, std::span<const Complex> point,
                     mpfr_prec_t precision_bits);
// symmetric by construction: upper triangle computed, mirrored
MatrixXc hessian_at(const LaurentPoly& p, std::span<const Complex> point,
                    mpfr_prec_t precision_bits);

inline std::span<const Complex> as_span(const VectorXc& v) {
  return std::span<const Complex>(v.data(), static_cast<size_t>(v.size()));
}

}  // namespace lgfano
