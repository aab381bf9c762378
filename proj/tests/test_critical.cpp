#include <doctest.h>

#include <sstream>

#include "lgfano/critical.hpp"

using namespace lgfano;

namespace {

constexpr mpfr_prec_t kPrec = 256;

Complex cpx(double re, double im = 0.0) { return Complex(re, im, kPrec); }

Real half_prec_tol() { return Real::two_pow(-static_cast<long>(kPrec) / 2, kPrec); }

const std::vector<std::string> kCorpus{"@1",  "@2",  "@3",  "2@3",   "2@4",
                                       "3@3", "3@4", "4@4", "2,2@5", "2,3@5"};

}  // namespace

TEST_CASE("symmetric critical points of the line mirror") {
  CIModel m = make_model({}, 1);
  auto points = symmetric_critical_points(m, kPrec);
  REQUIRE(points.size() == 2);
  Real tol = half_prec_tol();
  CHECK(abs(points[0].coordinates(0) - cpx(1)) < tol);
  CHECK(abs(points[0].value - cpx(2)) < tol);
  CHECK(abs(points[1].coordinates(0) - cpx(-1)) < tol);
  CHECK(abs(points[1].value - cpx(-2)) < tol);
  CHECK(points[0].branch == 0);
  CHECK(points[1].branch == 1);
}

TEST_CASE("symmetric critical points of the quadric surface") {
  CIModel m = make_model({2}, 3);
  auto points = symmetric_critical_points(m, kPrec);
  REQUIRE(points.size() == 2);
  Real tol = half_prec_tol();
  CHECK(abs(points[0].coordinates(0) - cpx(1)) < tol);
  CHECK(abs(points[0].coordinates(1) - cpx(2)) < tol);
  CHECK(abs(points[0].value - cpx(4)) < tol);
  CHECK(abs(points[1].coordinates(1) - cpx(-2)) < tol);
  CHECK(abs(points[1].value - cpx(-4)) < tol);
}

TEST_CASE("symmetric critical point of the cubic surface") {
  CIModel m = make_model({3}, 3);
  auto points = symmetric_critical_points(m, kPrec);
  REQUIRE(points.size() == 1);
  Real tol = half_prec_tol();
  CHECK(abs(points[0].coordinates(0) - cpx(1)) < tol);
  CHECK(abs(points[0].coordinates(1) - cpx(1)) < tol);
  CHECK(abs(points[0].value - cpx(27)) < tol);
}

TEST_CASE("symmetric points satisfy the scalar critical system") {
  // with y the common tail coordinate and lambda the critical value:
  //   d = (lambda - (index-1) y) y^(index-1),  lambda = index y,
  //   d index = lambda y^(index-1); degenerates to lambda = d when index = 1
  Real tol = half_prec_tol();
  for (const std::string& dsc : kCorpus) {
    CIModel m = parse_descriptor(dsc);
    auto points = symmetric_critical_points(m, kPrec);
    REQUIRE(points.size() == static_cast<size_t>(m.index));
    Complex d(Rational(m.dconst), kPrec);
    for (const CriticalPointRecord& p : points) {
      Complex lambda = p.value;
      if (m.index == 1) {
        CHECK(abs(lambda - d) < tol * abs(d));
        continue;
      }
      Complex y = p.coordinates(m.dim - 1);  // tail coordinates all equal
      Complex ypow = pow_si(y, m.index - 1);
      CHECK(abs(lambda - y * static_cast<long>(m.index)) < tol * (Real(1L, kPrec) + abs(lambda)));
      CHECK(abs((lambda - y * static_cast<long>(m.index - 1)) * ypow - d) <
            tol * (Real(1L, kPrec) + abs(d)));
      CHECK(abs(lambda * ypow - d * static_cast<long>(m.index)) <
            tol * (Real(1L, kPrec) + abs(d)));
    }
  }
}

TEST_CASE("newton refinement from a nearby start") {
  CIModel line = make_model({}, 1);
  ProbeConfig cfg;
  cfg.precision_bits = kPrec;
  Tolerances tol = Tolerances::defaults(line, kPrec);
  VectorXc start(1);
  start(0) = cpx(1.1);
  NewtonResult res = newton_refine(build_givental(line), start, cfg, tol.residual);
  REQUIRE(res.status == NewtonStatus::converged);
  CHECK(abs(res.point(0) - cpx(1)) < Real::from_string("1e-25", kPrec));
  CHECK(abs(res.value - cpx(2)) < Real::from_string("1e-25", kPrec));
}

TEST_CASE("newton refinement lands on the quadric surface point") {
  CIModel m = make_model({2}, 3);
  ProbeConfig cfg;
  cfg.precision_bits = kPrec;
  Tolerances tol = Tolerances::defaults(m, kPrec);
  VectorXc start(2);
  start(0) = cpx(1.05);
  start(1) = cpx(1.9);
  NewtonResult res = newton_refine(build_givental(m), start, cfg, tol.residual);
  REQUIRE(res.status == NewtonStatus::converged);
  CHECK(abs(res.point(0) - cpx(1)) < Real::from_string("1e-25", kPrec));
  CHECK(abs(res.point(1) - cpx(2)) < Real::from_string("1e-25", kPrec));
  CHECK(abs(res.value - cpx(4)) < Real::from_string("1e-25", kPrec));
}

TEST_CASE("the central locus of the cubic surface is exactly critical") {
  // oracle: on x1 + x2 + 1 = 0 the mirror vanishes along with its gradient;
  // coordinates whose inverses are dyadic keep the evaluation exact
  CIModel m = make_model({3}, 3);
  LaurentPoly f = build_givental(m);
  std::vector<Complex> locus{cpx(1), cpx(-2)};
  CHECK(evaluate(f, locus, kPrec).is_zero());
  VectorXc g = gradient_at(f, locus, kPrec);
  CHECK(g(0).is_zero());
  CHECK(g(1).is_zero());
}

TEST_CASE("newton converges to the central locus from a perturbed start") {
  CIModel m = make_model({3}, 3);
  ProbeConfig cfg;
  cfg.precision_bits = kPrec;
  Tolerances tol = Tolerances::defaults(m, kPrec);
  VectorXc start(2);
  start(0) = cpx(0.501, 0.002);
  start(1) = cpx(-1.498, 0.001);
  NewtonResult res = newton_refine(build_givental(m), start, cfg, tol.residual);
  REQUIRE(res.status == NewtonStatus::converged);
  CHECK(abs(res.value) < tol.value);
}

TEST_CASE("probing the line finds exactly its two critical points") {
  // exhaustive oracle: 1 - x^-2 has exactly the roots +1 and -1
  CIModel m = make_model({}, 1);
  ProbeConfig cfg;
  cfg.seed = 42;
  cfg.trials = 50;
  cfg.precision_bits = kPrec;
  Tolerances tol = Tolerances::defaults(m, kPrec);
  ProbeOutcome out = probe_random(m, cfg, tol);
  REQUIRE(out.points.size() == 2);
  Real close = Real::from_string("1e-25", kPrec);
  bool plus = false, minus = false;
  for (const CriticalPointRecord& p : out.points) {
    if (abs(p.coordinates(0) - cpx(1)) < close) plus = true;
    if (abs(p.coordinates(0) - cpx(-1)) < close) minus = true;
  }
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("probing the quadric surface yields only the symmetric pair") {
  CIModel m = make_model({2}, 3);
  ProbeConfig cfg;
  cfg.precision_bits = kPrec;
  Tolerances tol = Tolerances::defaults(m, kPrec);
  ProbeOutcome out = probe_random(m, cfg, tol);
  auto merged = merge_points(symmetric_critical_points(m, kPrec), out.points, tol.dedup);
  Classified cls = classify(merged, tol);
  CHECK(cls.nonzero.size() == 2);
  CHECK(cls.near_zero.empty());
  CHECK(cls.near_zero_clusters == 0);
}

TEST_CASE("probing the cubic surface reports the central cluster") {
  CIModel m = make_model({3}, 3);
  ProbeConfig cfg;
  cfg.precision_bits = kPrec;
  Tolerances tol = Tolerances::defaults(m, kPrec);
  ProbeOutcome out = probe_random(m, cfg, tol);
  auto merged = merge_points(symmetric_critical_points(m, kPrec), out.points, tol.dedup);
  Classified cls = classify(merged, tol);
  REQUIRE(cls.nonzero.size() == 1);
  CHECK(abs(cls.nonzero[0].value - cpx(27)) < Real::from_string("1e-20", kPrec));
  CHECK(cls.near_zero_clusters >= 1);
  for (const CriticalPointRecord& p : cls.near_zero) {
    // every near-zero find sits on x1 + x2 + 1 = 0
    Complex s = p.coordinates(0) + p.coordinates(1) + Complex::one(kPrec);
    CHECK(abs(s) < Real::from_string("1e-10", kPrec));
  }
}

TEST_CASE("classification splits and orders the plane spectrum") {
  CIModel m = make_model({}, 2);
  Tolerances tol = Tolerances::defaults(m, kPrec);
  Classified cls = classify(symmetric_critical_points(m, kPrec), tol);
  REQUIRE(cls.nonzero.size() == 3);
  CHECK(cls.near_zero.empty());
  // sorted by argument: 3 w^2, 3, 3 w with w = exp(2 pi i / 3)
  CHECK(arg(cls.nonzero[0].value) < arg(cls.nonzero[1].value));
  CHECK(arg(cls.nonzero[1].value) < arg(cls.nonzero[2].value));
  bool found_real = false;
  for (const auto& p : cls.nonzero)
    if (abs(p.value - cpx(3)) < half_prec_tol()) found_real = true;
  CHECK(found_real);
}

TEST_CASE("probing is deterministic for a fixed seed") {
  CIModel m = make_model({2}, 4);
  ProbeConfig cfg;
  cfg.trials = 60;
  cfg.precision_bits = kPrec;
  Tolerances tol = Tolerances::defaults(m, kPrec);
  ProbeOutcome a = probe_random(m, cfg, tol);
  ProbeOutcome b = probe_random(m, cfg, tol);
  REQUIRE(a.points.size() == b.points.size());
  CHECK(a.stats.converged == b.stats.converged);
  CHECK(a.stats.diverged == b.stats.diverged);
  for (size_t i = 0; i < a.points.size(); ++i) {
    std::ostringstream sa, sb;
    for (Eigen::Index c = 0; c < a.points[i].coordinates.size(); ++c) {
      sa << a.points[i].coordinates(c).str() << ";";
      sb << b.points[i].coordinates(c).str() << ";";
    }
    CHECK(sa.str() == sb.str());
  }
}

TEST_CASE("probe configuration is validated") {
  CIModel m = make_model({}, 1);
  Tolerances tol = Tolerances::defaults(m, kPrec);
  ProbeConfig bad;
  bad.trials = 0;
  CHECK_THROWS_AS(probe_random(m, bad, tol), std::invalid_argument);
  bad.trials = 1;
  bad.r_min = 0.0;
  CHECK_THROWS_AS(probe_random(m, bad, tol), std::invalid_argument);
  bad.r_min = 2.0;
  bad.r_max = 1.0;
  CHECK_THROWS_AS(probe_random(m, bad, tol), std::invalid_argument);
}
