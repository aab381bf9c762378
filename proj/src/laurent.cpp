#include "lgfano/laurent.hpp"

#include <stdexcept>

namespace lgfano {

namespace {

void check_point(const LaurentPoly& p, std::span<const Complex> point) {
  if (point.size() != static_cast<size_t>(p.nvars()))
    throw std::invalid_argument("point length does not match variable count");
  std::vector<bool> has_negative(point.size(), false);
  for (const auto& term : p.terms())
    for (size_t i = 0; i < point.size(); ++i)
      if (term.first[i] < 0) has_negative[i] = true;
  for (size_t i = 0; i < point.size(); ++i)
    if (point[i].is_zero() && has_negative[i])
      throw std::domain_error("zero coordinate with a negative exponent present");
}

Complex eval_sorted(const LaurentPoly& p, std::span<const Complex> point, mpfr_prec_t prec) {
  Complex acc = Complex::zero(prec);
  for (const auto& term : p.terms()) {
    Complex t(term.second, prec);
    for (size_t i = 0; i < point.size(); ++i)
      if (term.first[i] != 0) t *= pow_si(point[i], term.first[i]);
    acc += t;
  }
  return acc;
}

}  // namespace

Complex evaluate(const LaurentPoly& p, std::span<const Complex> point, mpfr_prec_t prec) {
  check_point(p, point);
  return eval_sorted(p, point, prec);
}

VectorXc gradient_at(const LaurentPoly& p, std::span<const Complex> point, mpfr_prec_t prec) {
  check_point(p, point);
  VectorXc g(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) {
    LaurentPoly d = partial_derivative(p, static_cast<size_t>(i));
    check_point(d, point);
    g(i) = eval_sorted(d, point, prec);
  }
  return g;
}

MatrixXc hessian_at(const LaurentPoly& p, std::span<const Complex> point, mpfr_prec_t prec) {
  check_point(p, point);
  const int n = p.nvars();
  MatrixXc h(n, n);
  for (int i = 0; i < n; ++i) {
    LaurentPoly di = partial_derivative(p, static_cast<size_t>(i));
    for (int j = i; j < n; ++j) {
      LaurentPoly dij = partial_derivative(di, static_cast<size_t>(j));
      check_point(dij, point);
      h(i, j) = eval_sorted(dij, point, prec);
      if (j != i) h(j, i) = h(i, j);
    }
  }
  return h;
}

namespace {

size_t find_var(const std::vector<std::string>& names, const std::string& token) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == token) return i;
  throw std::invalid_argument("unknown variable in polynomial text: " + token);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
  return out;
}

}  // namespace

LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
  const int nvars = static_cast<int>(var_names.size());
  LaurentPoly p(nvars, var_names);
  if (text == "0" || text.empty()) return p;
  for (const std::string& term_text : split(text, " + ")) {
    auto parts = split(term_text, " * ");
    if (parts.empty() || parts.size() > 2)
      throw std::invalid_argument("malformed polynomial term: " + term_text);
    Rational coeff = rational_from_string(parts[0]);
    ExponentVector e(static_cast<size_t>(nvars));
    if (parts.size() == 2) {
      for (const std::string& factor : split(parts[1], " ")) {
        size_t caret = factor.find('^');
        if (caret == std::string::npos)
          throw std::invalid_argument("malformed monomial factor: " + factor);
        size_t var = find_var(var_names, factor.substr(0, caret));
        e[var] += static_cast<int32_t>(std::stol(factor.substr(caret + 1)));
      }
    }
    p = p + LaurentPoly::monomial(coeff, e, var_names);
  }
  return p;
}

}  // namespace lgfano
