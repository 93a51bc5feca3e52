// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 all criteria
//   acceptance --criterion 7   one criterion
//   acceptance --json DIR      also write per-criterion JSON reports

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gnm/experiments.hpp"
#include "gnm/reports.hpp"
#include "gnm/verify.hpp"

using namespace gnm;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  Json details = Json::object();
};

std::int64_t m_at(std::int64_t n) { return static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(n), 1.3))); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Folds checks into one outcome; the first failing case becomes the summary.
Outcome from_checks(const std::vector<CheckResult>& checks, double seconds, double limit) {
  Outcome out;
  std::uint64_t cases = 0;
  for (const CheckResult& c : checks) {
    cases += c.cases;
    out.details[c.name] = to_json(c);
    if (!c.passed) {
      if (out.passed) out.summary = c.name + ": " + c.first_failure;
      out.passed = false;
    }
  }
  if (limit > 0 && seconds >= limit) {
    if (out.passed) out.summary = "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s";
    out.passed = false;
  }
  if (out.passed) out.summary = std::to_string(cases) + " cases";
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.1f s)", seconds);
  out.summary += buf;
  out.details["seconds"] = seconds;
  return out;
}

Outcome timed(const std::function<std::vector<CheckResult>()>& body, double limit = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CheckResult> checks = body();
  return from_checks(checks, seconds_since(t0), limit);
}

Outcome concentration(const std::string& artifacts) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  std::vector<std::string> problems;
  std::string notes;
  for (std::int64_t n : {100, 200}) {
    ExperimentConfig cfg;
    cfg.kind = "concentration";
    cfg.n = n;
    cfg.m = m_at(n);
    cfg.trials = 200;
    cfg.seed = 0;
    const auto t_run = std::chrono::steady_clock::now();
    const ConcentrationRun run = run_concentration(cfg);
    const double run_seconds = seconds_since(t_run);
    const ConcentrationSummary& s = run.summary;

    // Rerun: all trials at n = 100; the first 20 at n = 200.
    std::vector<std::int64_t> subset;
    const std::int64_t rerun_count = n == 100 ? cfg.trials : 20;
    for (std::int64_t i = 0; i < rerun_count; ++i) subset.push_back(i);
    const std::vector<TrialRow> again = run_concentration_trials(cfg, subset);
    bool identical = true;
    for (std::size_t i = 0; i < again.size(); ++i) identical = identical && again[i] == run.rows[i];
    if (n == 100) identical = identical && trials_csv(again) == trials_csv(run.rows);

    Json j = to_json(s);
    j["run_seconds"] = run_seconds;
    j["rerun_trials"] = rerun_count;
    j["rerun_identical"] = identical;
    out.details["n=" + std::to_string(n)] = j;
    if (!artifacts.empty()) {
      write_text_file(artifacts + "/concentration_n" + std::to_string(n) + ".csv", trials_csv(run.rows));
      write_text_file(artifacts + "/concentration_n" + std::to_string(n) + ".json", dump(j));
    }

    const std::string tag = "n=" + std::to_string(n);
    if (s.failures > 0) problems.push_back(tag + " " + std::to_string(s.failures) + " trials over budget");
    if (s.support_width > 4)
      problems.push_back(tag + " support " + std::to_string(s.support_min) + ".." + std::to_string(s.support_max) +
                         " (width " + std::to_string(s.support_width) + ")");
    if (std::abs(s.median_offset) > 2)
      problems.push_back(tag + " median " + std::to_string(s.median) + " vs k_0 " + std::to_string(s.k_0));
    if (!identical) problems.push_back(tag + " rerun differs");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s: support %d..%d, median %.1f, k_0 %lld, coverage %.2f", notes.empty() ? "" : "; ",
                  tag.c_str(), s.support_min, s.support_max, s.median, static_cast<long long>(s.k_0), s.coverage);
    notes += buf;
  }
  const double seconds = seconds_since(t0);
  out.details["seconds"] = seconds;
  if (seconds >= 1800) problems.push_back("took " + std::to_string(seconds) + " s");
  out.passed = problems.empty();
  out.summary = notes;
  for (const std::string& p : problems) out.summary += " | " + p;
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.1f s)", seconds);
  out.summary += buf;
  return out;
}

Outcome xkr() {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig cfg;
  cfg.kind = "xkr";
  cfg.n = 6;
  cfg.m = 9;
  cfg.k = 2;
  cfg.r = 0;
  cfg.trials = 100'000;
  cfg.seed = 0;
  const XkrReport rep = run_xkr(cfg);
  Outcome out;
  out.details = to_json(rep);
  out.passed = rep.within_3se && std::abs(rep.exact - 0.01798) < 5e-6;
  char buf[160];
  std::snprintf(buf, sizeof buf, "MC mean %.6f, exact %.6f, z = %.2f (%.1f s)", rep.mc_mean, rep.exact, rep.z,
                seconds_since(t0));
  out.summary = buf;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::string json_dir;
  app.add_option("--criterion", only, "run one criterion (1-12)")->check(CLI::Range(1, 12));
  app.add_option("--json", json_dir, "directory for per-criterion JSON and experiment artifacts");
  CLI11_PARSE(app, argc, argv);
  if (!json_dir.empty()) std::filesystem::create_directories(json_dir);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"lemma-1 equivalence, all graphs on 6 vertices",
       [] { return timed([] { return std::vector{checks::lemma1_exhaustive(6)}; }, 60); }},
      {"solver oracle, exhaustive n=6 plus 10^4 random n in [7,16]",
       [] {
         return timed([] { return std::vector{checks::solver_exhaustive(6), checks::solver_random(10'000, 7, 16, 0)}; });
       }},
      {"enumeration oracle, beta*gamma <= 20", [] { return timed([] { return std::vector{checks::enum_dp(20)}; }, 120); }},
      {"exact Phi identity, n <= 7, k <= 4, r <= 1",
       [] { return timed([] { return std::vector{checks::phi_identity(7, 4, 1)}; }); }},
      {"Chernoff and Janson bounds never violated",
       [] { return timed([] { return std::vector{checks::hyper_bounds(200, 60, 0), checks::janson_exhaustive(3)}; }); }},
      {"local CLT at beta=500, c in {4,6,8}",
       [] { return timed([] { return std::vector{checks::local_clt(500, {4, 6, 8})}; }, 60); }},
      {"enumeration trend, beta in {100,200,400}", [] { return timed([] { return std::vector{checks::enum_trend()}; }); }},
      {"ratio lemmas, n in {1e5,1e6,1e7}",
       [] { return timed([] { return std::vector{checks::ratio_lemmas({100'000, 1'000'000, 10'000'000})}; }); }},
      {"threshold relations at n=1e6", [] { return timed([] { return std::vector{checks::threshold_relations(1'000'000)}; }); }},
      {"first-moment sum at n=1e6", [] { return timed([] { return std::vector{checks::first_moment(1'000'000)}; }); }},
      {"concentration at n=100 and n=200, 200 trials", [&] { return concentration(json_dir); }},
      {"X_{2,0} moment at n=6, m=9, 10^5 trials", [] { return xkr(); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && id != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.summary = std::string("error: ") + e.what();
    }
    all = all && o.passed;
    std::cout << "criterion " << id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[i].first << "  -- "
              << o.summary << std::endl;
    if (!json_dir.empty()) {
      Json j = {{"criterion", id}, {"title", criteria[i].first}, {"passed", o.passed}, {"summary", o.summary}};
      j["details"] = o.details;
      write_text_file(json_dir + "/criterion_" + std::to_string(id) + ".json", dump(j));
    }
  }
  return all ? 0 : 2;
}
