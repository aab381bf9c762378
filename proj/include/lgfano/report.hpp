#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lgfano/critical.hpp"
#include "lgfano/hessian.hpp"
#include "lgfano/period.hpp"
#include "lgfano/spectrum.hpp"

namespace lgfano {

inline constexpr const char* kSchemaVersion = "1";

struct RunConfig {
  std::string descriptor;
  mpfr_prec_t precision_bits = 256;
  size_t period_order = 12;
  int probe_trials = 200;
  uint64_t seed = 42;
  std::string format = "json";  // json | csv | markdown
  size_t term_cap = kDefaultTermCap;
  bool include_timings = false;
  int workers = 1;  // corpus entries run concurrently up to this cap
  // decimal-string overrides; empty means the model defaults
  std::string residual_tol;
  std::string value_tol;
  std::string dedup_tol;
  std::string match_tol;

  Tolerances tolerances(const CIModel& model) const;
};

enum class VerdictStatus { pass, fail, skipped };

struct Verdict {
  std::string claim;
  VerdictStatus status = VerdictStatus::fail;
  bool evidence_only = false;
  std::string detail;
};

struct StageTimings {
  double model_s = 0, periods_s = 0, critical_s = 0, hessian_s = 0, spectrum_s = 0,
         total_s = 0;
};

struct FullReport {
  CIModel model;
  ModelInvariants inv;
  LaurentPoly mirror;
  PeriodReport periods;
  std::vector<CriticalPointRecord> symmetric;
  ProbeStats probe_stats;
  Classified classified;
  std::vector<HessianReport> hessians;  // one per nonzero-value point, in order
  ChartAnalysis chart;
  SpectrumReport spectrum;
  std::vector<Verdict> verdicts;
  bool all_hard_pass = false;
  StageTimings timings;
};

FullReport run_report(const RunConfig& config);

nlohmann::ordered_json report_json(const FullReport& rep, const RunConfig& config);
std::string report_csv(const FullReport& rep);
std::string report_markdown(const FullReport& rep);

std::string periods_csv(const PeriodReport& rep);
nlohmann::ordered_json periods_json(const PeriodReport& rep);

struct CorpusEntry {
  std::string descriptor;
  bool ok = false;           // run completed
  std::string error;         // populated when ok is false
  FullReport report;         // valid when ok
};

struct CorpusResult {
  std::vector<CorpusEntry> entries;  // corpus order
  bool validation_failed = false;    // some descriptor did not parse
  bool all_pass = false;
};

// Parses every descriptor first; any validation failure stops the run before
// computation and is reported per row. Entries are computed concurrently up
// to config.workers; output order is corpus order regardless of scheduling.
CorpusResult run_corpus(const std::vector<std::string>& descriptors, const RunConfig& config);

nlohmann::ordered_json corpus_json(const CorpusResult& result, const RunConfig& config);
std::string corpus_csv(const CorpusResult& result);
std::string corpus_markdown(const CorpusResult& result);

std::vector<std::string> read_corpus_file(const std::string& path);

}  // namespace lgfano
