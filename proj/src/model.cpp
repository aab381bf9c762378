#include "lgfano/model.hpp"

#include <sstream>
#include <stdexcept>

#include "lgfano/hodge.hpp"

namespace lgfano {

std::string CIModel::descriptor() const {
  std::ostringstream os;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) os << ",";
    os << degrees[i];
  }
  os << "@" << ambient;
  return os.str();
}

CIModel make_model(const std::vector<int>& degrees, int ambient) {
  if (ambient < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  const int k = static_cast<int>(degrees.size());
  if (k > ambient - 1 && k > 0)
    throw std::invalid_argument("too many hypersurfaces for the ambient space");
  int degree_sum = 0;
  for (int d : degrees) {
    if (d <= 1)
      throw std::invalid_argument(
          "degree <= 1 rejected: present the minimal embedding instead");
    degree_sum += d;
  }
  CIModel m;
  m.degrees = degrees;
  m.ambient = ambient;
  m.dim = ambient - k;
  m.index = ambient + 1 - degree_sum;
  if (m.index <= 0) throw std::invalid_argument("not Fano: index <= 0");
  if (m.dim < 1) throw std::invalid_argument("dimension < 1");
  m.dconst = 1;
  for (int d : degrees) m.dconst *= int_pow(Integer(d), static_cast<unsigned long>(d));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= degrees[static_cast<size_t>(i - 1)] - 1; ++j)
      m.var_names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  for (int s = 1; s <= m.index - 1; ++s) m.var_names.push_back("y" + std::to_string(s));
  if (static_cast<int>(m.var_names.size()) != m.dim)
    throw std::logic_error("variable count does not match dimension");
  return m;
}

CIModel parse_descriptor(const std::string& text) {
  size_t at = text.find('@');
  if (at == std::string::npos)
    throw std::invalid_argument("descriptor must contain '@': " + text);
  std::vector<int> degrees;
  std::string head = text.substr(0, at);
  if (!head.empty()) {
    size_t pos = 0;
    while (true) {
      size_t comma = head.find(',', pos);
      std::string tok = head.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (tok.empty()) throw std::invalid_argument("empty degree in descriptor: " + text);
      size_t used = 0;
      int d = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad degree token: " + tok);
      degrees.push_back(d);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  std::string tail = text.substr(at + 1);
  if (tail.empty()) throw std::invalid_argument("missing ambient dimension: " + text);
  size_t used = 0;
  int ambient = std::stoi(tail, &used);
  if (used != tail.size()) throw std::invalid_argument("bad ambient token: " + tail);
  return make_model(degrees, ambient);
}

LaurentPoly build_givental(const CIModel& model) {
  const int n = model.dim;
  const auto& names = model.var_names;
  // numerator prod_i (x_{i,1}+...+x_{i,d_i-1}+1)^{d_i}
  LaurentPoly numerator = LaurentPoly::constant(Rational(1), n, names);
  size_t var = 0;
  for (int i = 0; i < model.k(); ++i) {
    const int d = model.degrees[static_cast<size_t>(i)];
    LaurentPoly group = LaurentPoly::constant(Rational(1), n, names);
    for (int j = 0; j < d - 1; ++j) group = group + LaurentPoly::variable(var++, n, names);
    numerator = numerator * pow(group, static_cast<unsigned long>(d));
  }
  // divide by the product of all variables (x's and y's)
  ExponentVector denom(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) denom[static_cast<size_t>(i)] = -1;
  LaurentPoly f = numerator * LaurentPoly::monomial(Rational(1), denom, names);
  // additive tail y_1 + ... + y_{index-1}
  for (int s = 0; s < model.index - 1; ++s)
    f = f + LaurentPoly::variable(var + static_cast<size_t>(s), n, names);
  return f;
}

Real d_root(const CIModel& model, mpfr_prec_t prec) {
  return rootn(Real(model.dconst, prec), static_cast<unsigned long>(model.index));
}

Complex expected_critical_value(const CIModel& model, int branch, mpfr_prec_t prec) {
  Complex phase = Complex::root_of_unity(branch, model.index, prec);
  return phase * (d_root(model, prec) * static_cast<long>(model.index));
}

ModelInvariants invariants(const CIModel& model, mpfr_prec_t prec) {
  ModelInvariants inv;
  inv.dim = model.dim;
  inv.index = model.index;
  inv.dconst = model.dconst;
  inv.expected_exceptional_count = model.index;
  for (int r = 0; r < model.index; ++r)
    inv.expected_critical_values.push_back(expected_critical_value(model, r, prec));
  if (model.dim >= 2) inv.h1nm1 = hodge_h1nm1(model);
  inv.baseline_only = (model.dim == 1);
  return inv;
}

}  // namespace lgfano
