#include "lgfano/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgfano {

std::optional<VectorXc> solve_linear(MatrixXc a, VectorXc b, const Real& pivot_floor) {
  const auto n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    Real best = abs(a(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      Real cand = abs(a(r, col));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (!(best > pivot_floor)) return std::nullopt;
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      std::swap(b(col), b(pivot));
    }
    for (Eigen::Index r = col + 1; r < n; ++r) {
      Complex factor = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b(r) -= factor * b(col);
    }
  }
  VectorXc x(n);
  for (Eigen::Index r = n; r-- > 0;) {
    Complex s = b(r);
    for (Eigen::Index c = r + 1; c < n; ++c) s -= a(r, c) * x(c);
    x(r) = s / a(r, r);
  }
  return x;
}

std::vector<Real> singular_values(const MatrixXc& a, mpfr_prec_t prec) {
  const auto n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("singular_values: square input expected");
  MatrixXc g = a.adjoint() * a;  // Hermitian PSD
  // cyclic Jacobi: annihilate g(p,q) with a unitary rotation until the
  // off-diagonal mass is negligible against the diagonal
  Real off_floor = Real::two_pow(-2 * static_cast<long>(prec), prec);
  Real diag_scale = Real::zero(prec);
  for (Eigen::Index i = 0; i < n; ++i) diag_scale += abs(g(i, i));
  diag_scale += Real(1L, prec);
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Real off = Real::zero(prec);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += abs2(g(p, q));
    if (off <= off_floor * diag_scale * diag_scale) break;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        Real apq = abs(g(p, q));
        if (apq.is_zero()) continue;
        Complex phase = g(p, q) / Complex(apq);
        Real tau = (real(g(q, q)) - real(g(p, p))) / (Real(2L, prec) * apq);
        Real t = (tau.sign() >= 0 ? Real(1L, prec) : Real(-1L, prec)) /
                 (abs(tau) + sqrt(Real(1L, prec) + tau * tau));
        Real c = Real(1L, prec) / sqrt(Real(1L, prec) + t * t);
        Complex s = phase * (t * c);
        // G <- J^H G J with J = [[c, s],[-conj(s), c]] acting on (p,q)
        for (Eigen::Index i = 0; i < n; ++i) {
          Complex gip = g(i, p), giq = g(i, q);
          g(i, p) = gip * c - giq * conj(s);
          g(i, q) = gip * s + giq * c;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          Complex gpi = g(p, i), gqi = g(q, i);
          g(p, i) = gpi * c - gqi * s;
          g(q, i) = conj(s) * gpi + gqi * c;
        }
      }
  }
  std::vector<Real> sv;
  sv.reserve(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Real d = real(g(i, i));
    if (d.sign() < 0) d = Real::zero(prec);
    sv.push_back(sqrt(d));
  }
  std::sort(sv.begin(), sv.end(), [](const Real& x, const Real& y) { return x > y; });
  return sv;
}

std::vector<Complex> poly_roots(const std::vector<Rational>& coeffs, mpfr_prec_t prec) {
  // strip exact zero roots
  size_t zero_roots = 0;
  while (zero_roots < coeffs.size() && coeffs[zero_roots] == 0) ++zero_roots;
  if (zero_roots == coeffs.size()) throw std::invalid_argument("zero polynomial has no roots");
  std::vector<Rational> reduced(coeffs.begin() + static_cast<long>(zero_roots), coeffs.end());
  while (reduced.size() > 1 && reduced.back() == 0) reduced.pop_back();
  const size_t deg = reduced.size() - 1;

  std::vector<Complex> roots(zero_roots, Complex::zero(prec));
  if (deg == 0) return roots;

  std::vector<Complex> c;
  c.reserve(reduced.size());
  for (const Rational& q : reduced) c.emplace_back(q, prec);
  auto eval = [&](const Complex& z) {
    Complex acc = Complex::zero(prec);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  };

  // Durand-Kerner from a non-symmetric circle; radius from the Cauchy bound
  Real bound = Real(1L, prec);
  for (size_t i = 0; i < deg; ++i) {
    Real ratio = abs(Complex(reduced[i], prec) / c.back());
    if (ratio > bound) bound = ratio;
  }
  bound += Real(1L, prec);
  std::vector<Complex> z(deg);
  for (size_t j = 0; j < deg; ++j) {
    Real angle = (Real(2L, prec) * Real::pi(prec) * (Real(static_cast<long>(j), prec) +
                                                     Real(1L, prec) / 4)) /
                 static_cast<long>(deg);
    z[j] = Complex::from_polar(bound, angle);
  }
  Real step_floor = Real::two_pow(-static_cast<long>(prec) + 8, prec) * bound;
  const int max_iter = 512;
  for (int iter = 0; iter < max_iter; ++iter) {
    Real max_step = Real::zero(prec);
    for (size_t j = 0; j < deg; ++j) {
      Complex denom = c.back();
      for (size_t l = 0; l < deg; ++l)
        if (l != j) denom *= (z[j] - z[l]);
      Complex delta = eval(z[j]) / denom;
      z[j] -= delta;
      Real st = abs(delta);
      if (st > max_step) max_step = st;
    }
    if (max_step < step_floor) break;
  }
  for (auto& r : z) roots.push_back(r);
  return roots;
}

std::vector<Rational> char_poly(const MatrixXq& a) {
  const auto n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("char_poly: square input expected");
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  c[static_cast<size_t>(n)] = 1;
  MatrixXq m = MatrixXq::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    MatrixXq am = a * m;
    for (Eigen::Index i = 0; i < n; ++i)
      am(i, i) += c[static_cast<size_t>(n - k + 1)];
    m = am;
    MatrixXq prod = a * m;
    Rational trace(0);
    for (Eigen::Index i = 0; i < n; ++i) trace += prod(i, i);
    c[static_cast<size_t>(n - k)] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

}  // namespace lgfano
