#include <doctest.h>

#include "lgfano/period.hpp"

using namespace lgfano;

namespace {

// binomial oracle for the line: constant term of (y + 1/y)^m is C(m, m/2)
Rational central_binomial(size_t m) {
  if (m % 2 != 0) return Rational(0);
  Integer half = factorial(m / 2);
  return make_rational(factorial(m), half * half);
}

}  // namespace

TEST_CASE("line periods match the binomial oracle") {
  CIModel m = make_model({}, 1);
  std::vector<Rational> seq = period_sequence(m, 4);
  REQUIRE(seq.size() == 5);
  CHECK(seq[0] == 1);
  CHECK(seq[1] == 0);
  CHECK(seq[2] == 2);
  CHECK(seq[3] == 0);
  CHECK(seq[4] == 6);
  for (size_t i = 0; i <= 4; ++i) CHECK(seq[i] == central_binomial(i));
}

TEST_CASE("plane periods match the multinomial oracle") {
  CIModel m = make_model({}, 2);
  std::vector<Rational> seq = period_sequence(m, 6);
  REQUIRE(seq.size() == 7);
  // (3l)!/(l!)^3 at l = 1, 2
  CHECK(seq[3] == make_rational(factorial(3), Integer(1)));
  CHECK(seq[6] == make_rational(factorial(6), int_pow(factorial(2), 3)));
  CHECK(seq[3] == 6);
  CHECK(seq[6] == 90);
  for (size_t i : {1ul, 2ul, 4ul, 5ul}) CHECK(seq[i] == 0);
  CHECK(seq[0] == 1);
}

TEST_CASE("quadric surface periods") {
  CIModel m = make_model({2}, 3);
  std::vector<Rational> seq = period_sequence(m, 2);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == 1);
  CHECK(seq[1] == 0);
  CHECK(seq[2] == 4);
}

TEST_CASE("closed-form coefficients of the small models") {
  CIModel line = make_model({}, 1);
  std::vector<Rational> a = givental_coefficients(line, 4);
  CHECK(a[2] == 2);
  CHECK(a[4] == 6);

  CIModel cubic = make_model({3}, 3);
  a = givental_coefficients(cubic, 2);
  CHECK(a[1] == 6);
  CHECK(a[2] == 90);

  CIModel quadric = make_model({2}, 3);
  a = givental_coefficients(quadric, 2);
  CHECK(a[2] == 4);
}

TEST_CASE("period comparison on sample models") {
  CHECK(compare_periods(make_model({}, 2), 6).match);
  CHECK(compare_periods(make_model({3}, 4), 4).match);
  PeriodReport trivial = compare_periods(make_model({2, 2}, 5), 0);
  CHECK(trivial.match);
  CHECK(trivial.constant_terms == std::vector<Rational>{Rational(1)});
  CHECK(trivial.closed_form == std::vector<Rational>{Rational(1)});
}

TEST_CASE("periods vanish off the index lattice and are nonnegative integers") {
  const std::vector<std::string> corpus{"@1",  "@2",  "@3",  "2@3",   "2@4",
                                        "3@3", "3@4", "4@4", "2,2@5", "2,3@5"};
  for (const std::string& d : corpus) {
    CIModel m = parse_descriptor(d);
    std::vector<Rational> seq = period_sequence(m, 12);
    for (size_t i = 0; i < seq.size(); ++i) {
      if (i % static_cast<size_t>(m.index) != 0) CHECK(seq[i] == 0);
      CHECK(is_integer(seq[i]));
      CHECK(seq[i] >= 0);
    }
  }
}

TEST_CASE("term cap stops the power ladder") {
  CIModel m = make_model({4}, 4);
  CHECK_THROWS_AS(period_sequence(m, 12, 10), PeriodCapExceeded);
  try {
    period_sequence(m, 12, 40);
  } catch (const PeriodCapExceeded& e) {
    CHECK(e.completed_orders < 12);
    CHECK(e.term_count > 40);
  }
  PeriodReport rep = compare_periods(m, 12, 40);
  CHECK(rep.capped);
  CHECK(rep.computed_order < 12);
  CHECK(rep.match);  // the orders that were computed still agree
  CHECK(rep.constant_terms.size() == rep.computed_order + 1);
  CHECK(rep.closed_form.size() == rep.constant_terms.size());
}
