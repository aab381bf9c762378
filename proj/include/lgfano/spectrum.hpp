#pragma once

#include <string>
#include <vector>

#include "lgfano/linalg.hpp"
#include "lgfano/model.hpp"

namespace lgfano {

// Multiplication by the hyperplane class h on the h-span basis h^0..h^n,
// under h^(n+1) = d * h^(n+1-index) with the quantum parameter fixed at 1:
// subdiagonal 1s, single entry d at row (n+1-index) of the last column.
MatrixXq companion_matrix(const CIModel& model);

// det(lambda I - C), exact, constant term first (length n+2)
std::vector<Rational> companion_char_poly(const CIModel& model);

// lambda^(n+1) - d * lambda^(n+1-index), same layout
std::vector<Rational> expected_char_poly(const CIModel& model);

// Eigenvalues of index * C from the root structure of the relation: zero with
// multiplicity n+1-index, then index * d^(1/index) * phase(r) for r ascending.
std::vector<Complex> c1_spectrum(const CIModel& model, mpfr_prec_t precision_bits);

// Independent route: exact characteristic polynomial (Faddeev-LeVerrier),
// zero deflation, Durand-Kerner for the rest, scaled by index.
std::vector<Complex> c1_spectrum_eigensolver(const CIModel& model, mpfr_prec_t precision_bits);

struct SpectrumPairing {
  Complex eigenvalue;
  Complex critical_value;
  Real error;
};

struct SpectrumReport {
  std::vector<Complex> eigenvalues;  // all n+1, zeros first
  int zero_multiplicity = 0;
  std::vector<Complex> nonzero_values;      // sorted by argument
  std::vector<Complex> critical_values;     // input copy
  std::vector<SpectrumPairing> pairing;     // greedy nearest-neighbor
  bool matched = false;
  Real max_pairing_error;
  Real crosscheck_max_error;  // closed form vs independent eigensolver
  bool char_poly_matches = false;
  std::string note = "primitive part omitted";
};

// Pairs the nonzero c1 eigenvalues with located critical values. matched
// requires equal sizes (= index) and every pairing distance below
// tol_rel * max(1, |eigenvalue|).
SpectrumReport match_spectrum(const CIModel& model, const std::vector<Complex>& critical_values,
                              const Real& tol_rel, mpfr_prec_t precision_bits);

}  // namespace lgfano
