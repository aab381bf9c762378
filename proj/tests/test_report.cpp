#include <doctest.h>

#include "lgfano/report.hpp"

using namespace lgfano;

namespace {

RunConfig quick_config(const std::string& descriptor) {
  RunConfig cfg;
  cfg.descriptor = descriptor;
  cfg.probe_trials = 40;  // keep unit runs fast; acceptance uses the defaults
  cfg.period_order = 8;
  return cfg;
}

const Verdict& find_verdict(const FullReport& rep, const std::string& claim) {
  for (const Verdict& v : rep.verdicts)
    if (v.claim == claim) return v;
  throw std::logic_error("verdict missing: " + claim);
}

}  // namespace

TEST_CASE("full pipeline on the cubic surface") {
  FullReport rep = run_report(quick_config("3@3"));
  CHECK(rep.all_hard_pass);
  CHECK(rep.classified.nonzero.size() == 1);
  CHECK(find_verdict(rep, "singular_fiber_count").status == VerdictStatus::pass);
  CHECK(find_verdict(rep, "critical_values").status == VerdictStatus::pass);
  CHECK(find_verdict(rep, "odp_certification").status == VerdictStatus::pass);
  CHECK(find_verdict(rep, "spectrum_match").status == VerdictStatus::pass);
  CHECK(find_verdict(rep, "period_identity").status == VerdictStatus::pass);
  CHECK(find_verdict(rep, "probe_no_extras").evidence_only);
  REQUIRE(rep.hessians.size() == 1);
  CHECK(rep.hessians[0].rank == 2);
  Real tol = Real::from_string("1e-20", 256);
  CHECK(abs(rep.classified.nonzero[0].value - Complex(27L, 256)) < tol);
}

TEST_CASE("full pipeline on the line") {
  FullReport rep = run_report(quick_config("@1"));
  CHECK(rep.all_hard_pass);
  CHECK(rep.classified.nonzero.size() == 2);
  CHECK(rep.inv.baseline_only);
}

TEST_CASE("full pipeline on the intersection of two quadrics") {
  FullReport rep = run_report(quick_config("2,2@5"));
  CHECK(rep.all_hard_pass);
  REQUIRE(rep.classified.nonzero.size() == 2);
  Real tol = Real::from_string("1e-20", 256);
  bool has_plus = false, has_minus = false;
  for (const auto& p : rep.classified.nonzero) {
    if (abs(p.value - Complex(8L, 256)) < tol) has_plus = true;
    if (abs(p.value - Complex(-8L, 256)) < tol) has_minus = true;
  }
  CHECK(has_plus);
  CHECK(has_minus);
}

TEST_CASE("term cap downgrades the period verdict without failing the run") {
  RunConfig cfg = quick_config("4@4");
  cfg.term_cap = 50;
  FullReport rep = run_report(cfg);
  const Verdict& v = find_verdict(rep, "period_identity");
  CHECK(v.status == VerdictStatus::skipped);
  CHECK(rep.all_hard_pass);  // skipped is not a failure
  CHECK(rep.periods.capped);
}

TEST_CASE("report JSON is identical across repeated runs") {
  RunConfig cfg = quick_config("2@3");
  std::string a = report_json(run_report(cfg), cfg).dump(2);
  std::string b = report_json(run_report(cfg), cfg).dump(2);
  CHECK(a == b);
  CHECK(a.find("\"schema_version\": \"1\"") != std::string::npos);
  CHECK(a.find("timings") == std::string::npos);  // opt-in only
}

TEST_CASE("timings appear only when requested") {
  RunConfig cfg = quick_config("@1");
  cfg.include_timings = true;
  std::string with = report_json(run_report(cfg), cfg).dump(2);
  CHECK(with.find("timings") != std::string::npos);
}

TEST_CASE("corpus handles validation failures before computing") {
  RunConfig cfg;
  CorpusResult res = run_corpus({"@1", "5@4"}, cfg);
  CHECK(res.validation_failed);
  CHECK(!res.all_pass);
  REQUIRE(res.entries.size() == 2);
  CHECK(!res.entries[0].ok);  // nothing ran
  CHECK(!res.entries[1].ok);
  CHECK(res.entries[1].error.find("Fano") != std::string::npos);
}

TEST_CASE("empty corpus succeeds") {
  RunConfig cfg;
  CorpusResult res = run_corpus({}, cfg);
  CHECK(res.all_pass);
  CHECK(!res.validation_failed);
  CHECK(res.entries.empty());
}

TEST_CASE("corpus JSON is identical across worker counts") {
  RunConfig cfg;
  cfg.probe_trials = 30;
  cfg.period_order = 6;
  std::vector<std::string> descriptors{"@1", "2@3", "3@3"};
  cfg.workers = 1;
  std::string one = corpus_json(run_corpus(descriptors, cfg), cfg).dump(2);
  cfg.workers = 4;
  std::string four = corpus_json(run_corpus(descriptors, cfg), cfg).dump(2);
  CHECK(one == four);
}

TEST_CASE("csv and markdown renderings carry the verdict table") {
  RunConfig cfg = quick_config("2@3");
  FullReport rep = run_report(cfg);
  std::string csv = report_csv(rep);
  CHECK(csv.find("claim,status,evidence_only,detail") == 0);
  CHECK(csv.find("singular_fiber_count,pass") != std::string::npos);
  std::string md = report_markdown(rep);
  CHECK(md.find("| 2@3 | 2 | 4 |") != std::string::npos);
  std::string pcsv = periods_csv(rep.periods);
  CHECK(pcsv.find("m,constant_term,closed_form,equal") == 0);
  CHECK(pcsv.find("2,4,4,true") != std::string::npos);
}
