#include "lgfano/hodge.hpp"

#include <stdexcept>

#include "lgfano/model.hpp"

namespace lgfano {

namespace {

using Series = std::vector<Rational>;  // truncated power series, index = degree

Series series_mul(const Series& a, const Series& b) {
  Series c(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < c.size() && j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  }
  return c;
}

Series series_inv(const Series& a) {
  if (a[0] == 0) throw std::logic_error("series not invertible");
  Series b(a.size(), Rational(0));
  b[0] = 1 / a[0];
  for (size_t k = 1; k < a.size(); ++k) {
    Rational s(0);
    for (size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * b[k - i];
    b[k] = -s / a[0];
  }
  return b;
}

Series series_pow(Series base, unsigned long e) {
  Series acc(base.size(), Rational(0));
  acc[0] = 1;
  while (e > 0) {
    if (e & 1ul) acc = series_mul(acc, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return acc;
}

// Q_t(s*x) where Q_t(x) = (1 + t e^{-x}) / ((1 - e^{-x}) / x), the chi_y
// class contribution of a line-bundle Chern root.
Series chi_y_factor(const Rational& t, long scale, size_t len) {
  Series num(len, Rational(0));
  Series den(len, Rational(0));
  Rational sk(1);  // scale^k
  Integer fact(1);
  for (size_t k = 0; k < len; ++k) {
    if (k > 0) {
      fact *= static_cast<long>(k);
      sk *= scale;
    }
    Rational sign((k % 2 == 0) ? 1 : -1);
    Integer fact_next = fact * static_cast<long>(k + 1);
    num[k] = (k == 0 ? Rational(1) : Rational(0)) + t * sign * sk / Rational(fact);
    den[k] = sign * sk / Rational(fact_next);
  }
  return series_mul(num, series_inv(den));
}

Rational chi_y_at(const CIModel& model, const Rational& t) {
  const size_t len = static_cast<size_t>(model.dim) + 1;
  Series top = series_pow(chi_y_factor(t, 1, len),
                          static_cast<unsigned long>(model.ambient) + 1ul);
  Series bottom(len, Rational(0));
  bottom[0] = 1 + t;
  for (int d : model.degrees) bottom = series_mul(bottom, chi_y_factor(t, d, len));
  Series ratio = series_mul(top, series_inv(bottom));
  Rational deg(1);
  for (int d : model.degrees) deg *= d;
  return ratio[static_cast<size_t>(model.dim)] * deg;
}

}  // namespace

std::vector<Rational> chi_y_polynomial(const CIModel& model) {
  const int n = model.dim;
  // exact Lagrange interpolation through (t, chi_y(t)) for t = 0..n
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  for (int j = 0; j <= n; ++j) {
    Rational value = chi_y_at(model, Rational(j));
    // basis polynomial prod_{l != j} (y - l) / (j - l)
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (int l = 0; l <= n; ++l) {
      if (l == j) continue;
      basis.push_back(Rational(0));
      for (size_t i = basis.size() - 1; i >= 1; --i)
        basis[i] = basis[i - 1] - Rational(l) * basis[i];
      basis[0] = -Rational(l) * basis[0];
      denom *= Rational(j - l);
    }
    for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += value * basis[i] / denom;
  }
  return coeffs;
}

long hodge_h1nm1(const CIModel& model) {
  const int n = model.dim;
  if (n < 2) throw std::domain_error("h^{1,n-1} needs dimension >= 2");
  std::vector<Rational> chi = chi_y_polynomial(model);
  // chi_1 = -1^1 + (-1)^(n-1) * primitive part; middle h^{1,1} gains +1 when n = 2
  Rational prim = (chi[1] + 1) * Rational((n - 1) % 2 == 0 ? 1 : -1);
  Rational full = prim + Rational(n == 2 ? 1 : 0);
  if (!is_integer(full) || full < 0)
    throw std::logic_error("Hodge number oracle produced a non-integer");
  return static_cast<long>(full.get_num().get_si());
}

}  // namespace lgfano
