#pragma once

#include <optional>
#include <vector>

#include "lgfano/eigen_support.hpp"

namespace lgfano {

// Gaussian elimination with partial pivoting. Returns nullopt when the
// largest available pivot falls below pivot_floor (treated as singular).
std::optional<VectorXc> solve_linear(MatrixXc a, VectorXc b, const Real& pivot_floor);

// Singular values of a complex matrix, descending, via cyclic Jacobi
// iteration on the Hermitian Gram matrix. Intended for small dense inputs.
std::vector<Real> singular_values(const MatrixXc& a, mpfr_prec_t precision_bits);

// Roots of a polynomial with exact rational coefficients, constant term
// first. Exact zero roots are deflated by stripping trailing zero
// coefficients; the remaining simple cluster is found by Durand-Kerner
// iteration at the requested precision.
std::vector<Complex> poly_roots(const std::vector<Rational>& coeffs, mpfr_prec_t precision_bits);

// Characteristic polynomial det(lambda I - A) by the Faddeev-LeVerrier
// recurrence, exact over the rationals. Returned constant term first.
std::vector<Rational> char_poly(const MatrixXq& a);

}  // namespace lgfano
