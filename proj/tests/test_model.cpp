#include <doctest.h>

#include "lgfano/hodge.hpp"
#include "lgfano/model.hpp"

using namespace lgfano;

namespace {

constexpr mpfr_prec_t kPrec = 256;

const std::vector<std::string> kCorpus{"@1",  "@2",  "@3",  "2@3",   "2@4",
                                       "3@3", "3@4", "4@4", "2,2@5", "2,3@5"};

}  // namespace

TEST_CASE("derived invariants of standard models") {
  CIModel plane = make_model({}, 2);
  CHECK(plane.dim == 2);
  CHECK(plane.index == 3);
  CHECK(plane.dconst == 1);

  CIModel cubic = make_model({3}, 3);
  CHECK(cubic.dim == 2);
  CHECK(cubic.index == 1);
  CHECK(cubic.dconst == 27);

  CIModel two_quadrics = make_model({2, 2}, 5);
  CHECK(two_quadrics.dim == 3);
  CHECK(two_quadrics.index == 2);
  CHECK(two_quadrics.dconst == 16);
}

TEST_CASE("model validation failures") {
  CHECK_THROWS_AS(make_model({5}, 4), std::invalid_argument);   // index 0
  CHECK_THROWS_AS(make_model({6}, 4), std::invalid_argument);   // index < 0
  CHECK_THROWS_AS(make_model({1}, 3), std::invalid_argument);   // degree 1
  CHECK_THROWS_AS(make_model({2, 2, 2}, 3), std::invalid_argument);  // too many
  CHECK_THROWS_AS(make_model({}, 0), std::invalid_argument);
}

TEST_CASE("mirror polynomials of the small models") {
  CIModel p1 = make_model({}, 1);
  CHECK(build_givental(p1).str() == "1 * y1^1 + 1 * y1^-1");

  // the conic row: one variable, no tail
  CIModel conic = make_model({2}, 2);
  CHECK(conic.dim == 1);
  CHECK(conic.index == 1);
  CHECK(build_givental(conic).str() == "1 * x1_1^1 + 2 + 1 * x1_1^-1");

  CIModel quadric = make_model({2}, 3);
  LaurentPoly f = build_givental(quadric);
  // (x+1)^2/(x y) + y
  CHECK(f.str() == "1 * y1^1 + 1 * x1_1^1 y1^-1 + 2 * y1^-1 + 1 * x1_1^-1 y1^-1");
}

TEST_CASE("mirror variable count equals the dimension") {
  for (const std::string& d : kCorpus) {
    CIModel m = parse_descriptor(d);
    CHECK(build_givental(m).nvars() == m.dim);
  }
}

TEST_CASE("projective space mirrors take the standard form") {
  for (int n = 1; n <= 4; ++n) {
    CIModel m = make_model({}, n);
    LaurentPoly f = build_givental(m);
    LaurentPoly expected(n, m.var_names);
    ExponentVector inv_all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      inv_all[static_cast<size_t>(i)] = -1;
      expected = expected + LaurentPoly::variable(static_cast<size_t>(i), n, m.var_names);
    }
    expected = expected + LaurentPoly::monomial(Rational(1), inv_all, m.var_names);
    CHECK(f == expected);
  }
}

TEST_CASE("d equals one exactly for projective spaces") {
  for (const std::string& d : kCorpus) {
    CIModel m = parse_descriptor(d);
    CHECK((m.dconst == 1) == (m.k() == 0));
  }
}

TEST_CASE("expected critical values of the small models") {
  Real tol = Real::two_pow(-static_cast<long>(kPrec) / 2, kPrec);

  ModelInvariants cubic = invariants(make_model({3}, 3), kPrec);
  REQUIRE(cubic.expected_critical_values.size() == 1);
  CHECK(abs(cubic.expected_critical_values[0] - Complex(27L, kPrec)) < tol);

  ModelInvariants quadric = invariants(make_model({2}, 3), kPrec);
  REQUIRE(quadric.expected_critical_values.size() == 2);
  CHECK(abs(quadric.expected_critical_values[0] - Complex(4L, kPrec)) < tol);
  CHECK(abs(quadric.expected_critical_values[1] - Complex(-4L, kPrec)) < tol);

  ModelInvariants plane = invariants(make_model({}, 2), kPrec);
  REQUIRE(plane.expected_critical_values.size() == 3);
  for (int r = 0; r < 3; ++r) {
    Complex expected = Complex::root_of_unity(r, 3, kPrec) * Real(3L, kPrec);
    CHECK(abs(plane.expected_critical_values[static_cast<size_t>(r)] - expected) < tol);
  }
}

TEST_CASE("expected value multiset is phase-rotation stable") {
  Real tol = Real::two_pow(-static_cast<long>(kPrec) / 2, kPrec);
  for (const std::string& d : kCorpus) {
    CIModel m = parse_descriptor(d);
    ModelInvariants inv = invariants(m, kPrec);
    Complex phase = Complex::root_of_unity(1, m.index, kPrec);
    for (const Complex& v : inv.expected_critical_values) {
      Complex rotated = v * phase;
      bool found = false;
      for (const Complex& w : inv.expected_critical_values)
        if (abs(rotated - w) < tol) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("middle Hodge numbers from the generating-function oracle") {
  CHECK(hodge_h1nm1(make_model({3}, 4)) == 5);    // cubic threefold
  CHECK(hodge_h1nm1(make_model({4}, 4)) == 30);   // quartic threefold
  CHECK(hodge_h1nm1(make_model({2, 2}, 5)) == 2); // two quadrics
  CHECK(hodge_h1nm1(make_model({3}, 3)) == 7);
  CHECK(hodge_h1nm1(make_model({2}, 3)) == 2);
  CHECK(hodge_h1nm1(make_model({}, 2)) == 1);
  CHECK(hodge_h1nm1(make_model({}, 3)) == 0);
  CHECK(hodge_h1nm1(make_model({2}, 4)) == 0);
  CHECK_THROWS_AS(hodge_h1nm1(make_model({}, 1)), std::domain_error);
}

TEST_CASE("dimension-one models are flagged baseline only") {
  ModelInvariants inv = invariants(make_model({}, 1), kPrec);
  CHECK(inv.baseline_only);
  CHECK(!inv.h1nm1.has_value());
  inv = invariants(make_model({2}, 3), kPrec);
  CHECK(!inv.baseline_only);
  CHECK(inv.h1nm1.has_value());
}

TEST_CASE("descriptor round-trip") {
  for (const std::string& d : kCorpus) {
    CIModel m = parse_descriptor(d);
    CHECK(m.descriptor() == d);
    CIModel again = parse_descriptor(m.descriptor());
    CHECK(again.degrees == m.degrees);
    CHECK(again.ambient == m.ambient);
  }
  CIModel ci = parse_descriptor("2,3@5");
  CHECK(ci.index == 1);
  CHECK(ci.dconst == 108);
  CHECK_THROWS_AS(parse_descriptor("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("@"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("x@3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("2,@3"), std::invalid_argument);
}
