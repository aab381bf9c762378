#include "lgfano/hessian.hpp"

#include <stdexcept>

namespace lgfano {

std::pair<Rational, bool> uniform_matrix_det(const Rational& off, const Rational& diag, int m) {
  if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
  Rational first = diag - off;
  Rational second = diag + Rational(m - 1) * off;
  Rational det = second;
  for (int i = 0; i < m - 1; ++i) det *= first;
  return {det, det == 0};
}

namespace {

std::vector<std::string> chart_var_names(const CIModel& model) {
  std::vector<std::string> names;
  for (int i = 1; i <= model.k(); ++i)
    for (int j = 1; j <= model.degrees[static_cast<size_t>(i - 1)] - 1; ++j)
      names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
  for (int s = 1; s <= model.index - 1; ++s) names.push_back("b" + std::to_string(s));
  return names;
}

RootExt alpha(const CIModel& model) {
  return RootExt::generator(static_cast<size_t>(model.index), Rational(model.dconst));
}

}  // namespace

ChartPolynomial build_chart_polynomial(const CIModel& model, int branch) {
  if (branch < 0 || branch >= model.index) throw std::invalid_argument("branch out of range");
  const int n = model.dim;
  const auto names = chart_var_names(model);
  const RootExt t = alpha(model);

  // prod_i (a_{i,1}+...+a_{i,d_i-1} + d_i)^{d_i}
  ChartPoly head = ChartPoly::constant(RootExt(1), n, names);
  size_t var = 0;
  for (int i = 0; i < model.k(); ++i) {
    const int d = model.degrees[static_cast<size_t>(i)];
    ChartPoly group = ChartPoly::constant(RootExt(d), n, names);
    for (int j = 0; j < d - 1; ++j) group = group + ChartPoly::variable(var++, n, names);
    head = head * pow(group, static_cast<unsigned long>(d));
  }

  // (b_1+...+b_{index-1} - t) * prod (a_{i,j}+1) * prod (b_s + t)
  ChartPoly tail_sum = ChartPoly::constant(-t, n, names);
  for (int s = 0; s < model.index - 1; ++s)
    tail_sum = tail_sum + ChartPoly::variable(var + static_cast<size_t>(s), n, names);
  ChartPoly tail_prod = ChartPoly::constant(RootExt(1), n, names);
  for (size_t a = 0; a < var; ++a)
    tail_prod = tail_prod * (ChartPoly::variable(a, n, names) +
                             ChartPoly::constant(RootExt(1), n, names));
  for (int s = 0; s < model.index - 1; ++s)
    tail_prod = tail_prod * (ChartPoly::variable(var + static_cast<size_t>(s), n, names) +
                             ChartPoly::constant(t, n, names));

  ChartPolynomial chart;
  chart.g = head + tail_sum * tail_prod;
  chart.branch = branch;

  if (!coeff_is_zero(constant_term(chart.g)))
    throw std::logic_error("chart polynomial has a nonvanishing constant term");
  for (int u = 0; u < n; ++u) {
    ExponentVector e(static_cast<size_t>(n));
    e[static_cast<size_t>(u)] = 1;
    if (!coeff_is_zero(chart.g.coefficient(e)))
      throw std::logic_error("chart polynomial has a nonvanishing linear term");
  }
  return chart;
}

MatrixXre extract_quadratic_matrix(const ChartPoly& g) {
  const int n = g.nvars();
  MatrixXre h(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      ExponentVector e(static_cast<size_t>(n));
      e[static_cast<size_t>(u)] += 1;
      e[static_cast<size_t>(v)] += 1;
      RootExt c = g.coefficient(e);
      h(u, v) = (u == v) ? c + c : c;
    }
  return h;
}

MatrixXre closed_form_matrix(const CIModel& model, DiagConvention convention) {
  const int n = model.dim;
  MatrixXre h(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) h(u, v) = RootExt(0);
  const Rational d(model.dconst);
  int offset = 0;
  for (int i = 0; i < model.k(); ++i) {
    const int di = model.degrees[static_cast<size_t>(i)];
    const int m = di - 1;
    Rational big_d = Rational(di - 1) * d / Rational(di);
    Rational diag = (convention == DiagConvention::doubled) ? 2 * big_d : big_d;
    Rational off = big_d - d;  // M_i
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        h(offset + u, offset + v) = RootExt(u == v ? diag : off);
    offset += m;
  }
  if (model.index >= 2) {
    RootExt tpow = pow(alpha(model), static_cast<unsigned long>(model.index - 2));
    const int m = model.index - 1;
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        h(offset + u, offset + v) = (u == v) ? tpow + tpow : tpow;
  }
  return h;
}

NondegeneracyReport block_nondegeneracy(const CIModel& model, DiagConvention convention,
                                        mpfr_prec_t prec) {
  NondegeneracyReport rep;
  const Rational d(model.dconst);
  auto push_block = [&](char kind, int index, int m, const RootExt& diag, const RootExt& off) {
    BlockFactors blk;
    blk.kind = kind;
    blk.block_index = index;
    blk.size = m;
    if (m == 1) {
      blk.factors.push_back(diag);
    } else {
      blk.factors.push_back(diag - off);
      RootExt tail = diag;
      for (int i = 0; i < m - 1; ++i) tail = tail + off;
      blk.factors.push_back(tail);
    }
    blk.nondegenerate = true;
    for (const RootExt& f : blk.factors) {
      if (f.is_zero()) blk.nondegenerate = false;
      // numeric cross-check at the principal branch
      if (abs(f.value_at_branch(Complex::one(prec), prec)) <
          Real::two_pow(-(static_cast<long>(prec) / 2), prec))
        blk.nondegenerate = false;
    }
    rep.nondegenerate = rep.nondegenerate && blk.nondegenerate;
    rep.blocks.push_back(std::move(blk));
  };

  for (int i = 0; i < model.k(); ++i) {
    const int di = model.degrees[static_cast<size_t>(i)];
    Rational big_d = Rational(di - 1) * d / Rational(di);
    Rational diag = (convention == DiagConvention::doubled) ? 2 * big_d : big_d;
    push_block('a', i + 1, di - 1, RootExt(diag), RootExt(big_d - d));
  }
  if (model.index >= 2) {
    RootExt tpow = pow(alpha(model), static_cast<unsigned long>(model.index - 2));
    push_block('b', 1, model.index - 1, tpow + tpow, tpow);
  }
  return rep;
}

namespace {

bool matrices_equal(const MatrixXre& a, const MatrixXre& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

ChartAnalysis analyze_chart(const CIModel& model, int branch, mpfr_prec_t prec) {
  ChartAnalysis out;
  out.chart = build_chart_polynomial(model, branch);
  out.constant_zero = true;  // build_chart_polynomial asserted both
  out.linear_zero = true;
  out.extracted = extract_quadratic_matrix(out.chart.g);
  out.closed_plain = closed_form_matrix(model, DiagConvention::plain);
  out.closed_doubled = closed_form_matrix(model, DiagConvention::doubled);
  bool matches_plain = matrices_equal(out.extracted, out.closed_plain);
  bool matches_doubled = matrices_equal(out.extracted, out.closed_doubled);
  if (matches_plain && matches_doubled)
    out.convention_match = ConventionMatch::both;
  else if (matches_plain)
    out.convention_match = ConventionMatch::plain;
  else if (matches_doubled)
    out.convention_match = ConventionMatch::doubled;
  else
    out.convention_match = ConventionMatch::neither;
  DiagConvention factor_side = (out.convention_match == ConventionMatch::doubled)
                                   ? DiagConvention::doubled
                                   : DiagConvention::plain;
  out.blocks = block_nondegeneracy(model, factor_side, prec);
  return out;
}

HessianReport certify_odp(const CIModel& model, const CriticalPointRecord& point,
                          mpfr_prec_t prec) {
  if (point.classification != PointClass::nonzero_value)
    throw std::invalid_argument("certification applies to nonzero-value critical points");
  HessianReport rep;
  rep.branch = point.branch.value_or(-1);
  rep.dimension = model.dim;
  LaurentPoly f = build_givental(model);
  rep.numeric_hessian = hessian_at(f, as_span(point.coordinates), prec);
  rep.singular_values = singular_values(rep.numeric_hessian, prec);
  Real threshold = Real::from_string("1e-10", prec) * rep.singular_values.front();
  rep.rank = 0;
  for (const Real& sv : rep.singular_values)
    if (sv > threshold) ++rep.rank;
  rep.odp_certified = (rep.rank == model.dim);
  return rep;
}

}  // namespace lgfano
