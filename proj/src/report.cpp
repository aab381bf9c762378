#include "lgfano/report.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace lgfano {

using nlohmann::ordered_json;

Tolerances RunConfig::tolerances(const CIModel& model) const {
  Tolerances tol = Tolerances::defaults(model, precision_bits);
  if (!residual_tol.empty()) tol.residual = Real::from_string(residual_tol, precision_bits);
  if (!value_tol.empty()) tol.value = Real::from_string(value_tol, precision_bits);
  if (!dedup_tol.empty()) tol.dedup = Real::from_string(dedup_tol, precision_bits);
  if (!match_tol.empty()) tol.value_match_rel = Real::from_string(match_tol, precision_bits);
  return tol;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::skipped: return "skipped";
  }
  return "fail";
}

std::string convention_name(ConventionMatch m) {
  switch (m) {
    case ConventionMatch::plain: return "plain";
    case ConventionMatch::doubled: return "doubled";
    case ConventionMatch::both: return "both";
    case ConventionMatch::neither: return "neither";
  }
  return "neither";
}

Verdict make_fiber_count_verdict(const FullReport& rep) {
  Verdict v;
  v.claim = "singular_fiber_count";
  const size_t found = rep.classified.nonzero.size();
  const size_t expected = static_cast<size_t>(rep.model.index);
  v.status = (found == expected) ? VerdictStatus::pass : VerdictStatus::fail;
  std::ostringstream os;
  os << "nonzero-value critical points: " << found << ", expected " << expected
     << "; near-zero clusters: " << rep.classified.near_zero_clusters;
  v.detail = os.str();
  return v;
}

Verdict make_probe_verdict(const FullReport& rep) {
  Verdict v;
  v.claim = "probe_no_extras";
  v.evidence_only = true;
  bool extras = false;
  for (const CriticalPointRecord& p : rep.classified.nonzero)
    if (!p.branch.has_value()) extras = true;
  v.status = extras ? VerdictStatus::fail : VerdictStatus::pass;
  std::ostringstream os;
  os << "trials " << rep.probe_stats.trials << ", converged " << rep.probe_stats.converged
     << ", diverged " << rep.probe_stats.diverged << ", singular " << rep.probe_stats.singular
     << ", distinct " << rep.probe_stats.distinct
     << (extras ? "; unexpected nonzero-value point found" : "; no unexpected points");
  v.detail = os.str();
  return v;
}

Verdict make_critical_values_verdict(const FullReport& rep, const Tolerances& tol,
                                     mpfr_prec_t prec) {
  Verdict v;
  v.claim = "critical_values";
  bool ok = rep.classified.nonzero.size() == rep.inv.expected_critical_values.size();
  Real worst = Real::zero(prec);
  std::vector<bool> used(rep.inv.expected_critical_values.size(), false);
  for (const CriticalPointRecord& p : rep.classified.nonzero) {
    size_t best = used.size();
    Real best_d = Real::from_string("inf", prec);
    for (size_t i = 0; i < rep.inv.expected_critical_values.size(); ++i) {
      if (used[i]) continue;
      Real d = abs(p.value - rep.inv.expected_critical_values[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == used.size()) {
      ok = false;
      break;
    }
    used[best] = true;
    Real allowed = tol.value_match_rel * max(Real(1L, prec),
                                             abs(rep.inv.expected_critical_values[best]));
    if (!(best_d < allowed)) ok = false;
    if (best_d > worst) worst = best_d;
  }
  v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
  v.detail = "max distance to expected value multiset: " + worst.str(6);
  return v;
}

Verdict make_odp_verdict(const FullReport& rep) {
  Verdict v;
  v.claim = "odp_certification";
  bool ok = !rep.hessians.empty() || rep.classified.nonzero.empty();
  std::ostringstream os;
  os << "ranks:";
  for (const HessianReport& h : rep.hessians) {
    os << " " << h.rank << "/" << h.dimension;
    if (!h.odp_certified) ok = false;
  }
  if (rep.hessians.empty()) os << " (none)";
  if (rep.classified.nonzero.empty()) ok = false;
  os << "; chart constant/linear vanish: " << (rep.chart.constant_zero && rep.chart.linear_zero)
     << "; convention: " << convention_name(rep.chart.convention_match)
     << "; blocks nondegenerate: " << rep.chart.blocks.nondegenerate;
  if (rep.chart.convention_match == ConventionMatch::neither) ok = false;
  if (!rep.chart.constant_zero || !rep.chart.linear_zero) ok = false;
  if (!rep.chart.blocks.nondegenerate) ok = false;
  v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
  v.detail = os.str();
  return v;
}

Verdict make_spectrum_verdict(const FullReport& rep, const CIModel& model, mpfr_prec_t prec) {
  Verdict v;
  v.claim = "spectrum_match";
  Real cross_allowed = Real::from_string("1e-20", prec) *
                       (Real(1L, prec) + Real(static_cast<long>(model.index), prec) *
                                             d_root(model, prec));
  bool ok = rep.spectrum.matched && rep.spectrum.char_poly_matches &&
            rep.spectrum.crosscheck_max_error < cross_allowed;
  v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
  std::ostringstream os;
  os << "char poly exact: " << rep.spectrum.char_poly_matches
     << "; pairing max error: " << rep.spectrum.max_pairing_error.str(6)
     << "; eigensolver cross-check max error: " << rep.spectrum.crosscheck_max_error.str(6);
  v.detail = os.str();
  return v;
}

Verdict make_period_verdict(const FullReport& rep) {
  Verdict v;
  v.claim = "period_identity";
  std::ostringstream os;
  if (rep.periods.capped) {
    v.status = VerdictStatus::skipped;
    os << "term cap hit; verified through order " << rep.periods.computed_order << " of "
       << rep.periods.max_order << (rep.periods.match ? " (all equal)" : " (mismatch!)");
    if (!rep.periods.match) v.status = VerdictStatus::fail;
  } else if (rep.periods.match) {
    v.status = VerdictStatus::pass;
    os << "constant terms equal closed form through order " << rep.periods.computed_order;
  } else {
    v.status = VerdictStatus::fail;
    os << "first mismatch at order " << rep.periods.first_mismatch.value_or(0);
  }
  v.detail = os.str();
  return v;
}

}  // namespace

FullReport run_report(const RunConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  FullReport rep;

  auto t_model = std::chrono::steady_clock::now();
  rep.model = parse_descriptor(config.descriptor);
  rep.inv = invariants(rep.model, config.precision_bits);
  rep.mirror = build_givental(rep.model);
  rep.timings.model_s = seconds_since(t_model);

  const Tolerances tol = config.tolerances(rep.model);

  auto t_periods = std::chrono::steady_clock::now();
  rep.periods = compare_periods(rep.model, config.period_order, config.term_cap);
  rep.timings.periods_s = seconds_since(t_periods);

  auto t_critical = std::chrono::steady_clock::now();
  rep.symmetric = symmetric_critical_points(rep.model, config.precision_bits);
  ProbeConfig probe;
  probe.seed = config.seed;
  probe.trials = config.probe_trials;
  probe.precision_bits = config.precision_bits;
  ProbeOutcome probed = probe_random(rep.model, probe, tol);
  rep.probe_stats = probed.stats;
  std::vector<CriticalPointRecord> merged =
      merge_points(rep.symmetric, probed.points, tol.dedup);
  rep.classified = classify(merged, tol);
  rep.timings.critical_s = seconds_since(t_critical);

  auto t_hessian = std::chrono::steady_clock::now();
  rep.chart = analyze_chart(rep.model, 0, config.precision_bits);
  for (const CriticalPointRecord& p : rep.classified.nonzero)
    rep.hessians.push_back(certify_odp(rep.model, p, config.precision_bits));
  rep.timings.hessian_s = seconds_since(t_hessian);

  auto t_spectrum = std::chrono::steady_clock::now();
  std::vector<Complex> located;
  located.reserve(rep.classified.nonzero.size());
  for (const CriticalPointRecord& p : rep.classified.nonzero) located.push_back(p.value);
  rep.spectrum =
      match_spectrum(rep.model, located, tol.value_match_rel, config.precision_bits);
  rep.timings.spectrum_s = seconds_since(t_spectrum);

  rep.verdicts.push_back(make_fiber_count_verdict(rep));
  rep.verdicts.push_back(make_critical_values_verdict(rep, tol, config.precision_bits));
  rep.verdicts.push_back(make_odp_verdict(rep));
  rep.verdicts.push_back(make_spectrum_verdict(rep, rep.model, config.precision_bits));
  rep.verdicts.push_back(make_period_verdict(rep));
  rep.verdicts.push_back(make_probe_verdict(rep));

  rep.all_hard_pass = true;
  for (const Verdict& v : rep.verdicts)
    if (!v.evidence_only && v.status == VerdictStatus::fail) rep.all_hard_pass = false;

  rep.timings.total_s = seconds_since(t0);
  return rep;
}

namespace {

ordered_json complex_json(const Complex& z) {
  return ordered_json{{"re", z.real().str()}, {"im", z.imag().str()}};
}

ordered_json point_json(const CriticalPointRecord& p) {
  ordered_json coords = ordered_json::array();
  for (Eigen::Index i = 0; i < p.coordinates.size(); ++i)
    coords.push_back(complex_json(p.coordinates(i)));
  ordered_json j;
  j["coordinates"] = coords;
  j["value"] = complex_json(p.value);
  j["residual"] = p.residual.str();
  if (p.branch.has_value())
    j["branch"] = *p.branch;
  else
    j["branch"] = nullptr;
  j["classification"] =
      p.classification == PointClass::nonzero_value ? "nonzero_value" : "near_zero_value";
  j["hits"] = p.hits;
  return j;
}

ordered_json ring_matrix_json(const MatrixXre& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json complex_matrix_json(const MatrixXc& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json verdicts_json(const std::vector<Verdict>& verdicts) {
  ordered_json arr = ordered_json::array();
  for (const Verdict& v : verdicts) {
    ordered_json j;
    j["claim"] = v.claim;
    j["status"] = status_name(v.status);
    j["evidence_only"] = v.evidence_only;
    j["detail"] = v.detail;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace

ordered_json periods_json(const PeriodReport& rep) {
  ordered_json j;
  j["descriptor"] = rep.descriptor;
  j["requested_order"] = rep.max_order;
  j["computed_order"] = rep.computed_order;
  j["capped"] = rep.capped;
  ordered_json rows = ordered_json::array();
  for (size_t m = 0; m < rep.constant_terms.size(); ++m) {
    ordered_json row;
    row["m"] = m;
    row["constant_term"] = to_string(rep.constant_terms[m]);
    row["closed_form"] = to_string(rep.closed_form[m]);
    row["equal"] = (rep.constant_terms[m] == rep.closed_form[m]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["match"] = rep.match;
  if (rep.first_mismatch.has_value())
    j["first_mismatch"] = *rep.first_mismatch;
  else
    j["first_mismatch"] = nullptr;
  return j;
}

std::string periods_csv(const PeriodReport& rep) {
  std::ostringstream os;
  os << "m,constant_term,closed_form,equal\n";
  for (size_t m = 0; m < rep.constant_terms.size(); ++m)
    os << m << "," << to_string(rep.constant_terms[m]) << "," << to_string(rep.closed_form[m])
       << "," << (rep.constant_terms[m] == rep.closed_form[m] ? "true" : "false") << "\n";
  return os.str();
}

ordered_json report_json(const FullReport& rep, const RunConfig& config) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["descriptor"] = rep.model.descriptor();

  ordered_json cfg;
  cfg["precision_bits"] = static_cast<long>(config.precision_bits);
  cfg["period_order"] = config.period_order;
  cfg["probe_trials"] = config.probe_trials;
  cfg["seed"] = config.seed;
  cfg["term_cap"] = config.term_cap;
  j["config"] = cfg;

  ordered_json model;
  model["degrees"] = rep.model.degrees;
  model["ambient"] = rep.model.ambient;
  model["dimension"] = rep.model.dim;
  model["fano_index"] = rep.model.index;
  model["d"] = rep.model.dconst.get_str();
  model["variables"] = rep.model.var_names;
  model["mirror"] = rep.mirror.str();
  if (rep.inv.h1nm1.has_value())
    model["h1nm1"] = *rep.inv.h1nm1;
  else
    model["h1nm1"] = nullptr;
  model["baseline_only"] = rep.inv.baseline_only;
  ordered_json expected = ordered_json::array();
  for (const Complex& z : rep.inv.expected_critical_values) expected.push_back(complex_json(z));
  model["expected_critical_values"] = expected;
  j["model"] = model;

  j["periods"] = periods_json(rep.periods);

  ordered_json crit;
  ordered_json sym = ordered_json::array();
  for (const CriticalPointRecord& p : rep.symmetric) sym.push_back(point_json(p));
  crit["symmetric"] = sym;
  ordered_json stats;
  stats["trials"] = rep.probe_stats.trials;
  stats["converged"] = rep.probe_stats.converged;
  stats["diverged"] = rep.probe_stats.diverged;
  stats["singular"] = rep.probe_stats.singular;
  stats["distinct"] = rep.probe_stats.distinct;
  crit["probe"] = stats;
  ordered_json nonzero = ordered_json::array();
  for (const CriticalPointRecord& p : rep.classified.nonzero) nonzero.push_back(point_json(p));
  crit["nonzero"] = nonzero;
  crit["near_zero_points"] = rep.classified.near_zero.size();
  crit["near_zero_clusters"] = rep.classified.near_zero_clusters;
  j["critical_points"] = crit;

  ordered_json hess;
  ordered_json points = ordered_json::array();
  for (const HessianReport& h : rep.hessians) {
    ordered_json hp;
    hp["branch"] = h.branch;
    hp["dimension"] = h.dimension;
    hp["rank"] = h.rank;
    hp["odp_certified"] = h.odp_certified;
    ordered_json sv = ordered_json::array();
    for (const Real& s : h.singular_values) sv.push_back(s.str());
    hp["singular_values"] = sv;
    hp["numeric_hessian"] = complex_matrix_json(h.numeric_hessian);
    points.push_back(hp);
  }
  hess["points"] = points;
  ordered_json chart;
  chart["branch"] = rep.chart.chart.branch;
  chart["constant_term_zero"] = rep.chart.constant_zero;
  chart["linear_terms_zero"] = rep.chart.linear_zero;
  chart["convention_match"] = convention_name(rep.chart.convention_match);
  chart["extracted_matrix"] = ring_matrix_json(rep.chart.extracted);
  chart["closed_form_plain"] = ring_matrix_json(rep.chart.closed_plain);
  chart["closed_form_doubled"] = ring_matrix_json(rep.chart.closed_doubled);
  ordered_json blocks = ordered_json::array();
  for (const BlockFactors& b : rep.chart.blocks.blocks) {
    ordered_json bj;
    bj["kind"] = std::string(1, b.kind);
    bj["block_index"] = b.block_index;
    bj["size"] = b.size;
    ordered_json factors = ordered_json::array();
    for (const RootExt& f : b.factors) factors.push_back(f.str());
    bj["factors"] = factors;
    bj["nondegenerate"] = b.nondegenerate;
    blocks.push_back(bj);
  }
  chart["blocks"] = blocks;
  chart["nondegenerate"] = rep.chart.blocks.nondegenerate;
  hess["chart"] = chart;
  j["hessian"] = hess;

  ordered_json spectrum_j;
  ordered_json eig = ordered_json::array();
  for (const Complex& z : rep.spectrum.eigenvalues) eig.push_back(complex_json(z));
  spectrum_j["eigenvalues"] = eig;
  spectrum_j["zero_multiplicity"] = rep.spectrum.zero_multiplicity;
  ordered_json nz = ordered_json::array();
  for (const Complex& z : rep.spectrum.nonzero_values) nz.push_back(complex_json(z));
  spectrum_j["nonzero_values"] = nz;
  spectrum_j["char_poly_matches"] = rep.spectrum.char_poly_matches;
  ordered_json pairing = ordered_json::array();
  for (const SpectrumPairing& p : rep.spectrum.pairing) {
    ordered_json pj;
    pj["eigenvalue"] = complex_json(p.eigenvalue);
    pj["critical_value"] = complex_json(p.critical_value);
    pj["error"] = p.error.str();
    pairing.push_back(pj);
  }
  spectrum_j["pairing"] = pairing;
  spectrum_j["max_pairing_error"] = rep.spectrum.max_pairing_error.str();
  spectrum_j["crosscheck_max_error"] = rep.spectrum.crosscheck_max_error.str();
  spectrum_j["matched"] = rep.spectrum.matched;
  spectrum_j["note"] = rep.spectrum.note;
  j["spectrum"] = spectrum_j;

  j["verdicts"] = verdicts_json(rep.verdicts);
  j["overall"] = rep.all_hard_pass ? "pass" : "fail";

  if (config.include_timings) {
    ordered_json t;
    t["model_s"] = rep.timings.model_s;
    t["periods_s"] = rep.timings.periods_s;
    t["critical_s"] = rep.timings.critical_s;
    t["hessian_s"] = rep.timings.hessian_s;
    t["spectrum_s"] = rep.timings.spectrum_s;
    t["total_s"] = rep.timings.total_s;
    j["timings"] = t;
  }
  return j;
}

std::string report_csv(const FullReport& rep) {
  std::ostringstream os;
  os << "claim,status,evidence_only,detail\n";
  for (const Verdict& v : rep.verdicts)
    os << v.claim << "," << status_name(v.status) << "," << (v.evidence_only ? "true" : "false")
       << ",\"" << v.detail << "\"\n";
  return os.str();
}

namespace {

std::string short_values(const std::vector<CriticalPointRecord>& points) {
  std::ostringstream os;
  for (size_t i = 0; i < points.size(); ++i) {
    if (i) os << ", ";
    os << points[i].value.str(8);
  }
  return os.str();
}

std::string markdown_row(const FullReport& rep) {
  std::ostringstream os;
  os << "| " << rep.model.descriptor() << " | " << rep.model.index << " | "
     << rep.model.dconst.get_str() << " | " << short_values(rep.classified.nonzero) << " | ";
  for (size_t i = 0; i < rep.hessians.size(); ++i) {
    if (i) os << ",";
    os << rep.hessians[i].rank;
  }
  os << " | " << rep.spectrum.max_pairing_error.str(4) << " | " << rep.periods.computed_order
     << " | " << (rep.all_hard_pass ? "pass" : "FAIL") << " |";
  return os.str();
}

const char* kMarkdownHeader =
    "| model | index | d | critical values | ranks | spectrum err | period order | overall |\n"
    "|---|---|---|---|---|---|---|---|";

}  // namespace

std::string report_markdown(const FullReport& rep) {
  std::ostringstream os;
  os << kMarkdownHeader << "\n" << markdown_row(rep) << "\n\n";
  for (const Verdict& v : rep.verdicts)
    os << "- **" << v.claim << "**: " << status_name(v.status)
       << (v.evidence_only ? " (evidence only)" : "") << " -- " << v.detail << "\n";
  return os.str();
}

CorpusResult run_corpus(const std::vector<std::string>& descriptors, const RunConfig& config) {
  CorpusResult result;
  result.entries.resize(descriptors.size());
  for (size_t i = 0; i < descriptors.size(); ++i)
    result.entries[i].descriptor = descriptors[i];

  // validate everything first; bad descriptors stop the whole run
  for (size_t i = 0; i < descriptors.size(); ++i) {
    try {
      (void)parse_descriptor(descriptors[i]);
    } catch (const std::exception& e) {
      result.entries[i].error = e.what();
      result.validation_failed = true;
    }
  }
  if (result.validation_failed) {
    result.all_pass = false;
    return result;
  }

  const int workers = std::max(1, config.workers);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= descriptors.size()) return;
      RunConfig local = config;
      local.descriptor = descriptors[i];
      try {
        result.entries[i].report = run_report(local);
        result.entries[i].ok = true;
      } catch (const std::exception& e) {
        result.entries[i].error = e.what();
        result.entries[i].ok = false;
      }
    }
  };
  if (workers == 1 || descriptors.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  result.all_pass = true;
  for (const CorpusEntry& e : result.entries)
    if (!e.ok || !e.report.all_hard_pass) result.all_pass = false;
  return result;
}

ordered_json corpus_json(const CorpusResult& result, const RunConfig& config) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  ordered_json entries = ordered_json::array();
  for (const CorpusEntry& e : result.entries) {
    ordered_json ej;
    ej["descriptor"] = e.descriptor;
    ej["ok"] = e.ok;
    if (e.ok) {
      ej["report"] = report_json(e.report, config);
    } else {
      ej["error"] = e.error;
    }
    entries.push_back(ej);
  }
  j["entries"] = entries;
  j["validation_failed"] = result.validation_failed;
  j["all_pass"] = result.all_pass;
  return j;
}

std::string corpus_csv(const CorpusResult& result) {
  std::ostringstream os;
  os << "descriptor,ok,overall,error\n";
  for (const CorpusEntry& e : result.entries) {
    os << e.descriptor << "," << (e.ok ? "true" : "false") << ",";
    if (e.ok)
      os << (e.report.all_hard_pass ? "pass" : "fail") << ",";
    else
      os << "error,\"" << e.error << "\"";
    os << "\n";
  }
  return os.str();
}

std::string corpus_markdown(const CorpusResult& result) {
  std::ostringstream os;
  os << kMarkdownHeader << "\n";
  for (const CorpusEntry& e : result.entries) {
    if (e.ok)
      os << markdown_row(e.report) << "\n";
    else
      os << "| " << e.descriptor << " | - | - | error: " << e.error << " | - | - | - | FAIL |\n";
  }
  os << "\n" << (result.all_pass ? "All models pass." : "Failures present.") << "\n";
  return os.str();
}

std::vector<std::string> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace lgfano
