#include <doctest.h>

#include "lgfano/linalg.hpp"
#include "lgfano/root_ext.hpp"

using namespace lgfano;

namespace {

constexpr mpfr_prec_t kPrec = 256;

Complex cpx(double re, double im = 0.0) { return Complex(re, im, kPrec); }

Real tiny(long log2_tol = -200) { return Real::two_pow(log2_tol, kPrec); }

}  // namespace

TEST_CASE("real arithmetic carries the larger precision") {
  Real a(1.0, 128);
  Real b(1.0, 320);
  CHECK((a + b).precision() == 320);
  CHECK((a * b).precision() == 320);
  CHECK(Real(0.5, 40).precision() == 64);  // clamped to the floor
}

TEST_CASE("real string round-trip") {
  Real x = Real::from_string("-2.5e3", kPrec);
  CHECK(x.str(5) == "-2.5e3");
  CHECK(Real::zero(kPrec).str() == "0");
  Real y = sqrt(Real(2L, kPrec));
  Real back = Real::from_string(y.str(), kPrec);
  CHECK(abs(y - back) < tiny(-240));
  CHECK_THROWS_AS(Real::from_string("not-a-number", kPrec), std::invalid_argument);
}

TEST_CASE("rational to real conversion is correctly rounded") {
  Real third(make_rational(1, 3), kPrec);
  Real three(3L, kPrec);
  CHECK(abs(third * three - Real(1L, kPrec)) < tiny(-250));
}

TEST_CASE("complex division and powers") {
  Complex z = cpx(3, 4) / cpx(0, 1);  // (3+4i)/i = 4 - 3i
  CHECK(abs(z - cpx(4, -3)) < tiny());
  Complex w = pow_si(cpx(1, 1), 4);  // (1+i)^4 = -4
  CHECK(abs(w - cpx(-4)) < tiny());
  Complex inv = pow_si(cpx(0, 2), -2);  // (2i)^-2 = -1/4
  CHECK(abs(inv - cpx(-0.25)) < tiny());
  CHECK(abs(pow_si(cpx(5, -2), 0) - cpx(1)) < tiny());
}

TEST_CASE("roots of unity multiply to one") {
  for (long m : {1L, 2L, 3L, 5L, 8L}) {
    Complex acc = Complex::one(kPrec);
    Complex w = Complex::root_of_unity(1, m, kPrec);
    for (long i = 0; i < m; ++i) acc *= w;
    CHECK(abs(acc - Complex::one(kPrec)) < tiny(-240));
  }
}

TEST_CASE("ring elements reduce the generator power to the radicand") {
  RootExt t = RootExt::generator(3, Rational(5));  // t^3 = 5
  CHECK(pow(t, 3) == RootExt(Rational(5)));
  CHECK(pow(t, 4) == RootExt(Rational(5)) * t);
  CHECK(pow(t, 0) == RootExt(1));
}

TEST_CASE("ring arithmetic with scalar promotion") {
  RootExt t = RootExt::generator(2, Rational(4));
  RootExt sum = t + RootExt(3);
  CHECK(sum - RootExt(3) == t);
  CHECK(RootExt(2) * t == t + t);
  // zero divisors exist when the modulus splits: (t-2)(t+2) = t^2 - 4 = 0
  RootExt zero = (t - RootExt(2)) * (t + RootExt(2));
  CHECK(zero.is_zero());
  RootExt other = RootExt::generator(3, Rational(4));
  CHECK_THROWS_AS(t + other, std::invalid_argument);
  RootExt same_degree = RootExt::generator(2, Rational(7));
  CHECK_THROWS_AS(t * same_degree, std::invalid_argument);
}

TEST_CASE("ring numeric evaluation hits the real root") {
  RootExt t = RootExt::generator(2, Rational(27));
  Complex v = t.value_at_branch(Complex::one(kPrec), kPrec);
  CHECK(abs(v - Complex(sqrt(Real(27L, kPrec)))) < tiny(-240));
  Complex rotated = t.value_at_branch(Complex::root_of_unity(1, 2, kPrec), kPrec);
  CHECK(abs(rotated + Complex(sqrt(Real(27L, kPrec)))) < tiny(-240));
}

TEST_CASE("ring string forms") {
  CHECK(RootExt(Rational(-7)).str() == "-7");
  RootExt t = RootExt::generator(2, Rational(27));
  CHECK(t.str() == "1*t mod t^2 - 27");
  CHECK((t + t + RootExt(1)).str() == "2*t + 1 mod t^2 - 27");
  CHECK((t - t).str() == "0 mod t^2 - 27");
}

TEST_CASE("linear solver on an exact system") {
  MatrixXc a(2, 2);
  a(0, 0) = cpx(2);
  a(0, 1) = cpx(1);
  a(1, 0) = cpx(1);
  a(1, 1) = cpx(3);
  VectorXc b(2);
  b(0) = cpx(5);
  b(1) = cpx(10);
  auto x = solve_linear(a, b, Real::zero(kPrec));
  REQUIRE(x.has_value());
  CHECK(abs((*x)(0) - cpx(1)) < tiny(-240));
  CHECK(abs((*x)(1) - cpx(3)) < tiny(-240));
  MatrixXc singular(2, 2);
  singular(0, 0) = cpx(1);
  singular(0, 1) = cpx(2);
  singular(1, 0) = cpx(2);
  singular(1, 1) = cpx(4);
  CHECK(!solve_linear(singular, b, Real::from_string("1e-70", kPrec)).has_value());
}

TEST_CASE("singular values of known matrices") {
  // nilpotent Jordan block: singular values {1, 0}
  MatrixXc n(2, 2);
  n(0, 0) = cpx(0);
  n(0, 1) = cpx(1);
  n(1, 0) = cpx(0);
  n(1, 1) = cpx(0);
  auto sv = singular_values(n, kPrec);
  REQUIRE(sv.size() == 2);
  CHECK(abs(sv[0] - Real(1L, kPrec)) < tiny(-240));
  CHECK(sv[1] < tiny(-240));

  // complex symmetric 2x2 [[0, i], [i, 0]]: both singular values 1
  MatrixXc s(2, 2);
  s(0, 0) = cpx(0);
  s(0, 1) = cpx(0, 1);
  s(1, 0) = cpx(0, 1);
  s(1, 1) = cpx(0);
  sv = singular_values(s, kPrec);
  CHECK(abs(sv[0] - Real(1L, kPrec)) < tiny(-240));
  CHECK(abs(sv[1] - Real(1L, kPrec)) < tiny(-240));

  // diag(3, 4i) -> {4, 3}
  MatrixXc d(2, 2);
  d(0, 0) = cpx(3);
  d(0, 1) = cpx(0);
  d(1, 0) = cpx(0);
  d(1, 1) = cpx(0, 4);
  sv = singular_values(d, kPrec);
  CHECK(abs(sv[0] - Real(4L, kPrec)) < tiny(-240));
  CHECK(abs(sv[1] - Real(3L, kPrec)) < tiny(-240));
}

TEST_CASE("polynomial roots with exact zero deflation") {
  // l^2 (l - 1)(l + 2) = l^4 + l^3 - 2 l^2
  std::vector<Rational> coeffs{Rational(0), Rational(0), Rational(-2), Rational(1), Rational(1)};
  std::vector<Complex> roots = poly_roots(coeffs, kPrec);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].is_zero());
  CHECK(roots[1].is_zero());
  bool has_one = false, has_minus_two = false;
  for (const Complex& r : roots) {
    if (abs(r - cpx(1)) < tiny(-200)) has_one = true;
    if (abs(r - cpx(-2)) < tiny(-200)) has_minus_two = true;
  }
  CHECK(has_one);
  CHECK(has_minus_two);
  CHECK_THROWS_AS(poly_roots({Rational(0)}, kPrec), std::invalid_argument);
}

TEST_CASE("characteristic polynomial of a known matrix") {
  // [[2, 1], [1, 2]]: l^2 - 4l + 3
  MatrixXq m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  std::vector<Rational> cp = char_poly(m);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == 3);
  CHECK(cp[1] == -4);
  CHECK(cp[2] == 1);
  // 3x3 with a rational entry: companion of l^3 - (1/2) l - 5
  MatrixXq c = MatrixXq::Zero(3, 3);
  c(1, 0) = 1;
  c(2, 1) = 1;
  c(0, 2) = 5;
  c(1, 2) = make_rational(1, 2);
  cp = char_poly(c);
  CHECK(cp[0] == -5);
  CHECK(cp[1] == make_rational(-1, 2));
  CHECK(cp[2] == 0);
  CHECK(cp[3] == 1);
}
