#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace gnm {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string detail;         // what was checked, and the band used
  std::string first_failure;  // serialized failing case, empty when passed
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();

  // Records one case; the first failure is kept.
  void record(bool ok, const std::string& what_failed);
  void finish() { passed = failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

// Runs one battery; throws InputError for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 0);

// Individual checks, shared by the suites and the acceptance runner.
namespace checks {

CheckResult lemma1_exhaustive(int n);
CheckResult lemma1_random(int count, int n_min, int n_max, std::uint64_t seed);
CheckResult augmented_claim(int n);
CheckResult counting_order(int count, int n_max, std::uint64_t seed);
CheckResult classify_fuzz(int count, std::uint64_t seed);
CheckResult solver_exhaustive(int n);
CheckResult solver_random(int count, int n_min, int n_max, std::uint64_t seed);

CheckResult enum_dp(int max_cells);
CheckResult enum_recursion(int max_beta, int max_gamma);
CheckResult enum_modes(int max_beta, int max_gamma);
CheckResult phi_identity(int max_n, int max_k, int max_r);

CheckResult hyper_bounds(int cases, int max_population, std::uint64_t seed);
CheckResult janson_exhaustive(int max_N);

CheckResult local_clt(std::int64_t beta, const std::vector<double>& cs);
CheckResult enum_trend();

CheckResult ratio_lemmas(const std::vector<std::int64_t>& ns);
CheckResult ratio_convergence(const std::vector<std::int64_t>& ns);
CheckResult threshold_relations(std::int64_t n);
CheckResult first_moment(std::int64_t n);
CheckResult k_vanilla_window(std::int64_t n);

}  // namespace checks

}  // namespace gnm
