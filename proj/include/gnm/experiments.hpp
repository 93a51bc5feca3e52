#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gnm/config.hpp"

namespace gnm {

// Runs body(i) for i in [0, count) on `threads` workers (0: hardware
// concurrency). Each index runs exactly once; callers write results into
// slot i so the outcome never depends on the schedule.
void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)>& body);

struct TrialRow {
  std::int64_t trial = 0;
  std::uint64_t seed = 0;    // master seed
  std::uint64_t stream = 0;  // equals trial
  int alpha = -1;            // best bound found when failed
  std::uint64_t nodes = 0;
  bool failed = false;

  friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

struct ConcentrationSummary {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double eps = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t k_0 = 0;
  std::int64_t k_V = 0;
  std::vector<std::int64_t> interval;                 // {k_0 - 1, k_0}
  std::vector<std::pair<int, double>> pmf;            // alpha -> frequency, ascending
  double coverage = 0;                                // fraction inside interval
  int support_min = 0;
  int support_max = 0;
  int support_width = 0;                              // max - min + 1
  double median = 0;
  double median_offset = 0;                           // median - k_0
  std::int64_t failures = 0;
  // Calibration band: support width <= 4 and |median - k_0| <= 2.
  int band_width = 4;
  double band_median = 2;
  bool within_band = false;
};

struct ConcentrationRun {
  std::vector<TrialRow> rows;
  ConcentrationSummary summary;
};

// Samples G(n, m) on streams (seed, trial) and solves each exactly.
// A trial over the node budget is kept as a failed row.
ConcentrationRun run_concentration(const ExperimentConfig& cfg);

// Runs only the listed trial indices; rows match those of a full run.
std::vector<TrialRow> run_concentration_trials(const ExperimentConfig& cfg, const std::vector<std::int64_t>& trials);

ConcentrationSummary summarize(const ExperimentConfig& cfg, const std::vector<TrialRow>& rows);

struct XkrReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double mc_mean = 0;
  double std_error = 0;
  double log_N = 0;
  double U = 0;
  double phi = 0;    // exact mixture
  double exact = 0;  // N * U * phi
  double z = 0;      // (mc_mean - exact) / std_error; 0 when both spreads vanish
  bool within_3se = false;
};

// Monte-Carlo mean of the X_{k,r} count against N U Phi with exact Phi.
XkrReport run_xkr(const ExperimentConfig& cfg);

}  // namespace gnm
