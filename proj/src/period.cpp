#include "lgfano/period.hpp"

namespace lgfano {

namespace {

struct PartialSequence {
  std::vector<Rational> terms;
  bool capped = false;
  size_t term_count_at_cap = 0;
};

PartialSequence constant_terms_up_to(const CIModel& model, size_t M, size_t term_cap) {
  PartialSequence out;
  LaurentPoly f = build_givental(model);
  LaurentPoly power = LaurentPoly::constant(Rational(1), f.nvars(), f.var_names());
  out.terms.push_back(Rational(1));  // m = 0
  for (size_t m = 1; m <= M; ++m) {
    power = power * f;  // incremental: f^m = f^(m-1) * f
    if (power.term_count() > term_cap) {
      out.capped = true;
      out.term_count_at_cap = power.term_count();
      return out;
    }
    out.terms.push_back(constant_term(power));
  }
  return out;
}

}  // namespace

std::vector<Rational> period_sequence(const CIModel& model, size_t M, size_t term_cap) {
  PartialSequence seq = constant_terms_up_to(model, M, term_cap);
  if (seq.capped) throw PeriodCapExceeded(seq.terms.size() - 1, seq.term_count_at_cap);
  return seq.terms;
}

std::vector<Rational> givental_coefficients(const CIModel& model, size_t M) {
  std::vector<Rational> out;
  out.reserve(M + 1);
  for (size_t m = 0; m <= M; ++m) {
    if (m % static_cast<size_t>(model.index) != 0) {
      out.push_back(Rational(0));
      continue;
    }
    unsigned long l = m / static_cast<size_t>(model.index);
    Integer num = factorial(static_cast<unsigned long>(model.index) * l);
    for (int d : model.degrees) num *= factorial(static_cast<unsigned long>(d) * l);
    Integer den = int_pow(factorial(l), static_cast<unsigned long>(model.ambient) + 1ul);
    out.push_back(make_rational(num, den));
  }
  return out;
}

PeriodReport compare_periods(const CIModel& model, size_t M, size_t term_cap) {
  PeriodReport rep;
  rep.descriptor = model.descriptor();
  rep.max_order = M;
  PartialSequence seq = constant_terms_up_to(model, M, term_cap);
  rep.capped = seq.capped;
  rep.computed_order = seq.terms.size() - 1;
  rep.constant_terms = seq.terms;
  rep.closed_form = givental_coefficients(model, rep.computed_order);
  rep.match = true;
  for (size_t m = 0; m < rep.constant_terms.size(); ++m) {
    if (rep.constant_terms[m] != rep.closed_form[m]) {
      rep.match = false;
      rep.first_mismatch = m;
      break;
    }
  }
  return rep;
}

}  // namespace lgfano
