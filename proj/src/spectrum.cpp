#include "lgfano/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgfano {

MatrixXq companion_matrix(const CIModel& model) {
  const int size = model.dim + 1;
  MatrixXq c(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) c(i, j) = Rational(0);
  for (int j = 0; j + 1 < size; ++j) c(j + 1, j) = Rational(1);
  c(model.dim + 1 - model.index, size - 1) = Rational(model.dconst);
  return c;
}

std::vector<Rational> companion_char_poly(const CIModel& model) {
  return char_poly(companion_matrix(model));
}

std::vector<Rational> expected_char_poly(const CIModel& model) {
  std::vector<Rational> c(static_cast<size_t>(model.dim) + 2, Rational(0));
  c.back() = 1;
  c[static_cast<size_t>(model.dim + 1 - model.index)] = -Rational(model.dconst);
  return c;
}

std::vector<Complex> c1_spectrum(const CIModel& model, mpfr_prec_t prec) {
  std::vector<Complex> values;
  values.reserve(static_cast<size_t>(model.dim) + 1);
  for (int i = 0; i < model.dim + 1 - model.index; ++i) values.push_back(Complex::zero(prec));
  for (int r = 0; r < model.index; ++r) values.push_back(expected_critical_value(model, r, prec));
  return values;
}

std::vector<Complex> c1_spectrum_eigensolver(const CIModel& model, mpfr_prec_t prec) {
  std::vector<Complex> roots = poly_roots(companion_char_poly(model), prec);
  for (Complex& z : roots) z = z * static_cast<long>(model.index);
  return roots;
}

SpectrumReport match_spectrum(const CIModel& model, const std::vector<Complex>& critical_values,
                              const Real& tol_rel, mpfr_prec_t prec) {
  SpectrumReport rep;
  rep.eigenvalues = c1_spectrum(model, prec);
  rep.zero_multiplicity = model.dim + 1 - model.index;
  rep.nonzero_values.assign(rep.eigenvalues.begin() + rep.zero_multiplicity,
                            rep.eigenvalues.end());
  std::sort(rep.nonzero_values.begin(), rep.nonzero_values.end(),
            [](const Complex& a, const Complex& b) {
              Real aa = arg(a), ab = arg(b);
              if (aa != ab) return aa < ab;
              return real(a) < real(b);
            });
  rep.critical_values = critical_values;
  rep.char_poly_matches = (companion_char_poly(model) == expected_char_poly(model));

  // independent eigensolver cross-check (one-sided Hausdorff both ways via
  // greedy consumption)
  std::vector<Complex> solved = c1_spectrum_eigensolver(model, prec);
  rep.crosscheck_max_error = Real::zero(prec);
  {
    std::vector<bool> used(solved.size(), false);
    for (const Complex& e : rep.eigenvalues) {
      size_t best = solved.size();
      Real best_d = Real::from_string("inf", prec);
      for (size_t i = 0; i < solved.size(); ++i) {
        if (used[i]) continue;
        Real d = abs(e - solved[i]);
        if (d < best_d) {
          best_d = d;
          best = i;
        }
      }
      if (best == solved.size()) throw std::logic_error("eigensolver returned too few roots");
      used[best] = true;
      if (best_d > rep.crosscheck_max_error) rep.crosscheck_max_error = best_d;
    }
  }

  rep.max_pairing_error = Real::zero(prec);
  std::vector<bool> used(critical_values.size(), false);
  bool all_close = true;
  for (const Complex& e : rep.nonzero_values) {
    size_t best = critical_values.size();
    Real best_d = Real::from_string("inf", prec);
    for (size_t i = 0; i < critical_values.size(); ++i) {
      if (used[i]) continue;
      Real d = abs(e - critical_values[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == critical_values.size()) {
      all_close = false;
      break;
    }
    used[best] = true;
    rep.pairing.push_back({e, critical_values[best], best_d});
    Real allowed = tol_rel * max(Real(1L, prec), abs(e));
    if (!(best_d < allowed)) all_close = false;
    if (best_d > rep.max_pairing_error) rep.max_pairing_error = best_d;
  }
  rep.matched = all_close && critical_values.size() == rep.nonzero_values.size() &&
                rep.nonzero_values.size() == static_cast<size_t>(model.index);
  return rep;
}

}  // namespace lgfano
