// Command-line front end: parse a model descriptor, run the verification
// pipeline (or a single stage of it), and emit machine-readable reports.
//
// Exit status: 0 all checks pass, 1 a hard check failed, 2 usage or
// validation error.

#include <CLI11.hpp>
#include <iostream>

#include "lgfano/report.hpp"

namespace {

using namespace lgfano;

struct CommonOpts {
  RunConfig config;

  void attach(CLI::App* cmd, bool with_descriptor = true) {
    if (with_descriptor)
      cmd->add_option("descriptor", config.descriptor,
                      "model descriptor, `d1,...,dk@N` or `@N`")
          ->required();
    cmd->add_option("--precision", config.precision_bits, "working precision in bits")
        ->envname("LGFANO_PRECISION")
        ->check(CLI::Range(64l, 65536l));
    cmd->add_option("--terms", config.period_order, "period comparison order M");
    cmd->add_option("--probes", config.probe_trials, "random probe trials");
    cmd->add_option("--seed", config.seed, "probe seed");
    cmd->add_option("--term-cap", config.term_cap, "term-count cap for period powers");
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    cmd->add_flag("--timings", config.include_timings, "include wall-clock timings in JSON");
    cmd->add_option("--residual-tol", config.residual_tol, "override residual tolerance");
    cmd->add_option("--value-tol", config.value_tol, "override value-split tolerance");
    cmd->add_option("--dedup-tol", config.dedup_tol, "override dedup tolerance");
    cmd->add_option("--match-tol", config.match_tol, "override value-match tolerance");
  }
};

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_model(const RunConfig& cfg) {
  CIModel model = parse_descriptor(cfg.descriptor);
  ModelInvariants inv = invariants(model, cfg.precision_bits);
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["descriptor"] = model.descriptor();
  j["degrees"] = model.degrees;
  j["ambient"] = model.ambient;
  j["dimension"] = model.dim;
  j["fano_index"] = model.index;
  j["d"] = model.dconst.get_str();
  j["variables"] = model.var_names;
  j["mirror"] = build_givental(model).str();
  if (inv.h1nm1.has_value())
    j["h1nm1"] = *inv.h1nm1;
  else
    j["h1nm1"] = nullptr;
  j["baseline_only"] = inv.baseline_only;
  nlohmann::ordered_json expected = nlohmann::ordered_json::array();
  for (const Complex& z : inv.expected_critical_values)
    expected.push_back(nlohmann::ordered_json{{"re", z.real().str()}, {"im", z.imag().str()}});
  j["expected_critical_values"] = expected;
  emit(j);
  return 0;
}

int cmd_periods(const RunConfig& cfg) {
  CIModel model = parse_descriptor(cfg.descriptor);
  PeriodReport rep = compare_periods(model, cfg.period_order, cfg.term_cap);
  if (cfg.format == "csv")
    std::cout << periods_csv(rep);
  else
    emit(periods_json(rep));
  return rep.match ? 0 : 1;
}

int run_critical_stage(const RunConfig& cfg, CIModel& model, Classified& classified,
                       ProbeStats& stats) {
  model = parse_descriptor(cfg.descriptor);
  Tolerances tol = cfg.tolerances(model);
  auto symmetric = symmetric_critical_points(model, cfg.precision_bits);
  ProbeConfig probe;
  probe.seed = cfg.seed;
  probe.trials = cfg.probe_trials;
  probe.precision_bits = cfg.precision_bits;
  ProbeOutcome probed = probe_random(model, probe, tol);
  stats = probed.stats;
  classified = classify(merge_points(symmetric, probed.points, tol.dedup), tol);
  return 0;
}

nlohmann::ordered_json point_list_json(const std::vector<CriticalPointRecord>& points) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CriticalPointRecord& p : points) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < p.coordinates.size(); ++i)
      coords.push_back(nlohmann::ordered_json{{"re", p.coordinates(i).real().str()},
                                              {"im", p.coordinates(i).imag().str()}});
    j["coordinates"] = coords;
    j["value"] = nlohmann::ordered_json{{"re", p.value.real().str()},
                                        {"im", p.value.imag().str()}};
    j["residual"] = p.residual.str();
    if (p.branch.has_value())
      j["branch"] = *p.branch;
    else
      j["branch"] = nullptr;
    j["classification"] =
        p.classification == PointClass::nonzero_value ? "nonzero_value" : "near_zero_value";
    j["hits"] = p.hits;
    arr.push_back(j);
  }
  return arr;
}

int cmd_critical(const RunConfig& cfg) {
  CIModel model;
  Classified classified;
  ProbeStats stats;
  run_critical_stage(cfg, model, classified, stats);
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["descriptor"] = model.descriptor();
  j["nonzero"] = point_list_json(classified.nonzero);
  j["near_zero_points"] = classified.near_zero.size();
  j["near_zero_clusters"] = classified.near_zero_clusters;
  nlohmann::ordered_json s;
  s["trials"] = stats.trials;
  s["converged"] = stats.converged;
  s["diverged"] = stats.diverged;
  s["singular"] = stats.singular;
  s["distinct"] = stats.distinct;
  j["probe"] = s;
  emit(j);
  return classified.nonzero.size() == static_cast<size_t>(model.index) ? 0 : 1;
}

int cmd_hessian(const RunConfig& cfg) {
  CIModel model;
  Classified classified;
  ProbeStats stats;
  run_critical_stage(cfg, model, classified, stats);
  ChartAnalysis chart = analyze_chart(model, 0, cfg.precision_bits);
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["descriptor"] = model.descriptor();
  bool all_ok = chart.blocks.nondegenerate && chart.convention_match != ConventionMatch::neither;
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const CriticalPointRecord& p : classified.nonzero) {
    HessianReport h = certify_odp(model, p, cfg.precision_bits);
    nlohmann::ordered_json hp;
    hp["branch"] = h.branch;
    hp["rank"] = h.rank;
    hp["dimension"] = h.dimension;
    hp["odp_certified"] = h.odp_certified;
    nlohmann::ordered_json sv = nlohmann::ordered_json::array();
    for (const Real& s : h.singular_values) sv.push_back(s.str());
    hp["singular_values"] = sv;
    points.push_back(hp);
    all_ok = all_ok && h.odp_certified;
  }
  j["points"] = points;
  nlohmann::ordered_json cj;
  cj["constant_term_zero"] = chart.constant_zero;
  cj["linear_terms_zero"] = chart.linear_zero;
  cj["convention_match"] = chart.convention_match == ConventionMatch::plain     ? "plain"
                           : chart.convention_match == ConventionMatch::doubled ? "doubled"
                           : chart.convention_match == ConventionMatch::both    ? "both"
                                                                                : "neither";
  cj["nondegenerate"] = chart.blocks.nondegenerate;
  j["chart"] = cj;
  emit(j);
  return all_ok ? 0 : 1;
}

int cmd_spectrum(const RunConfig& cfg) {
  CIModel model;
  Classified classified;
  ProbeStats stats;
  run_critical_stage(cfg, model, classified, stats);
  Tolerances tol = cfg.tolerances(model);
  std::vector<Complex> located;
  for (const CriticalPointRecord& p : classified.nonzero) located.push_back(p.value);
  SpectrumReport rep = match_spectrum(model, located, tol.value_match_rel, cfg.precision_bits);
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["descriptor"] = model.descriptor();
  nlohmann::ordered_json eig = nlohmann::ordered_json::array();
  for (const Complex& z : rep.eigenvalues)
    eig.push_back(nlohmann::ordered_json{{"re", z.real().str()}, {"im", z.imag().str()}});
  j["eigenvalues"] = eig;
  j["zero_multiplicity"] = rep.zero_multiplicity;
  j["char_poly_matches"] = rep.char_poly_matches;
  j["max_pairing_error"] = rep.max_pairing_error.str();
  j["crosscheck_max_error"] = rep.crosscheck_max_error.str();
  j["matched"] = rep.matched;
  j["note"] = rep.note;
  emit(j);
  return (rep.matched && rep.char_poly_matches) ? 0 : 1;
}

int cmd_report(const RunConfig& cfg) {
  FullReport rep = run_report(cfg);
  if (cfg.format == "csv")
    std::cout << report_csv(rep);
  else if (cfg.format == "markdown")
    std::cout << report_markdown(rep);
  else
    emit(report_json(rep, cfg));
  return rep.all_hard_pass ? 0 : 1;
}

int cmd_corpus(const RunConfig& cfg, const std::string& path) {
  std::vector<std::string> descriptors = read_corpus_file(path);
  CorpusResult result = run_corpus(descriptors, cfg);
  if (cfg.format == "csv")
    std::cout << corpus_csv(result);
  else if (cfg.format == "markdown")
    std::cout << corpus_markdown(result);
  else
    emit(corpus_json(result, cfg));
  if (result.validation_failed) return 2;
  return result.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Ginzburg verification toolkit for Fano complete intersections"};
  app.require_subcommand(1);

  CommonOpts report_opts, corpus_opts, model_opts, periods_opts, critical_opts, hessian_opts,
      spectrum_opts;
  std::string corpus_path;

  CLI::App* report_cmd = app.add_subcommand("report", "run the full pipeline on one model");
  report_opts.attach(report_cmd);

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "run the pipeline over a descriptor file");
  corpus_cmd->add_option("file", corpus_path, "file with one descriptor per line")->required();
  corpus_opts.attach(corpus_cmd, false);
  corpus_cmd->add_option("--workers", corpus_opts.config.workers, "concurrent corpus entries")
      ->check(CLI::Range(1, 64));

  CLI::App* model_cmd = app.add_subcommand("model", "validate a descriptor and show invariants");
  model_opts.attach(model_cmd);

  CLI::App* periods_cmd = app.add_subcommand("periods", "period sequence vs closed form");
  periods_opts.attach(periods_cmd);

  CLI::App* critical_cmd = app.add_subcommand("critical", "locate and classify critical points");
  critical_opts.attach(critical_cmd);

  CLI::App* hessian_cmd = app.add_subcommand("hessian", "node certification at critical points");
  hessian_opts.attach(hessian_cmd);

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "quantum multiplication spectrum match");
  spectrum_opts.attach(spectrum_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (report_cmd->parsed()) return cmd_report(report_opts.config);
    if (corpus_cmd->parsed()) return cmd_corpus(corpus_opts.config, corpus_path);
    if (model_cmd->parsed()) return cmd_model(model_opts.config);
    if (periods_cmd->parsed()) return cmd_periods(periods_opts.config);
    if (critical_cmd->parsed()) return cmd_critical(critical_opts.config);
    if (hessian_cmd->parsed()) return cmd_hessian(hessian_opts.config);
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_opts.config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
