#include "gnm/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "gnm/alpha.hpp"
#include "gnm/errors.hpp"
#include "gnm/extended.hpp"
#include "gnm/prediction.hpp"
#include "gnm/pw_enum.hpp"
#include "gnm/sampling.hpp"

namespace gnm {

void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)>& body) {
  if (count <= 0) return;
  int workers = threads > 0 ? threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<std::int64_t>(workers, count));
  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::int64_t i; (i = next.fetch_add(1)) < count;) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
}

namespace {

TrialRow solve_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  TrialRow row;
  row.trial = trial;
  row.seed = cfg.seed;
  row.stream = static_cast<std::uint64_t>(trial);
  const Graph g = sample_gnm(static_cast<int>(cfg.n), *cfg.m, {cfg.seed, row.stream});
  try {
    const AlphaResult res = alpha_exact(g, {cfg.budget});
    row.alpha = res.alpha;
    row.nodes = res.nodes_explored;
  } catch (const BudgetExceeded& e) {
    row.alpha = e.best_bound();
    row.nodes = e.budget();
    row.failed = true;
  }
  return row;
}

void check_concentration(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.kind = "concentration";
  validate(c);
  if (cfg.n > 100000) throw InputError("n too large for exact independence numbers");
}

}  // namespace

std::vector<TrialRow> run_concentration_trials(const ExperimentConfig& cfg, const std::vector<std::int64_t>& trials) {
  check_concentration(cfg);
  std::vector<TrialRow> rows(trials.size());
  parallel_for(static_cast<std::int64_t>(trials.size()), cfg.threads,
               [&](std::int64_t i) { rows[static_cast<std::size_t>(i)] = solve_trial(cfg, trials[static_cast<std::size_t>(i)]); });
  return rows;
}

ConcentrationSummary summarize(const ExperimentConfig& cfg, const std::vector<TrialRow>& rows) {
  ConcentrationSummary s;
  s.n = cfg.n;
  s.m = *cfg.m;
  s.eps = cfg.eps;
  s.trials = static_cast<std::int64_t>(rows.size());
  s.seed = cfg.seed;
  const Params par(cfg.n, *cfg.m, cfg.eps);
  s.k_0 = k_zero(par);
  s.k_V = k_vanilla(par);
  s.interval = {s.k_0 - 1, s.k_0};
  std::vector<int> values;
  for (const TrialRow& row : rows) {
    if (row.failed) ++s.failures;
    else values.push_back(row.alpha);
  }
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  std::map<int, std::int64_t> counts;
  for (int v : values) ++counts[v];
  const auto total = static_cast<double>(values.size());
  std::int64_t inside = 0;
  for (const auto& [alpha, c] : counts) {
    s.pmf.emplace_back(alpha, static_cast<double>(c) / total);
    if (alpha == s.k_0 - 1 || alpha == s.k_0) inside += c;
  }
  s.coverage = static_cast<double>(inside) / total;
  s.support_min = values.front();
  s.support_max = values.back();
  s.support_width = s.support_max - s.support_min + 1;
  const std::size_t mid = values.size() / 2;
  s.median = values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
  s.median_offset = s.median - static_cast<double>(s.k_0);
  s.within_band = s.failures == 0 && s.support_width <= s.band_width && std::abs(s.median_offset) <= s.band_median;
  return s;
}

ConcentrationRun run_concentration(const ExperimentConfig& cfg) {
  check_concentration(cfg);
  std::vector<std::int64_t> trials(static_cast<std::size_t>(cfg.trials));
  for (std::int64_t i = 0; i < cfg.trials; ++i) trials[static_cast<std::size_t>(i)] = i;
  ConcentrationRun run;
  run.rows = run_concentration_trials(cfg, trials);
  run.summary = summarize(cfg, run.rows);
  return run;
}

XkrReport run_xkr(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.kind = "xkr";
  validate(c);
  if (cfg.n > 12) throw InputError("xkr counts exhaustively and needs n <= 12");
  XkrReport rep;
  rep.n = cfg.n;
  rep.m = *cfg.m;
  rep.k = cfg.k;
  rep.r = cfg.r;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(cfg.trials));
  parallel_for(cfg.trials, cfg.threads, [&](std::int64_t t) {
    const Graph g = sample_gnm(static_cast<int>(cfg.n), *cfg.m, {cfg.seed, static_cast<std::uint64_t>(t)});
    counts[static_cast<std::size_t>(t)] = count_variables(g, static_cast<int>(cfg.k), static_cast<int>(cfg.r)).X;
  });
  long double sum = 0;
  long double sum_sq = 0;
  for (std::uint64_t x : counts) {
    sum += x;
    sum_sq += static_cast<long double>(x) * x;
  }
  const auto trials = static_cast<long double>(cfg.trials);
  rep.mc_mean = static_cast<double>(sum / trials);
  if (cfg.trials > 1) {
    const long double var = std::max<long double>(0, (sum_sq - sum * sum / trials) / (trials - 1));
    rep.std_error = static_cast<double>(std::sqrt(var / trials));
  }

  const Params par(cfg.n, *cfg.m, cfg.eps);
  const LogNumber N = N_pairs(cfg.n, cfg.k, cfg.r);
  const LogNumber U = U_prob(par, cfg.k, cfg.r);
  rep.log_N = static_cast<double>(N.log_value());
  rep.U = U.value();
  rep.phi = phi_exact_mixture(cfg.n, *cfg.m, cfg.k, cfg.r);
  rep.exact = (N * U * LogNumber::from_value(rep.phi)).value();
  const double diff = rep.mc_mean - rep.exact;
  if (rep.std_error > 0) rep.z = diff / rep.std_error;
  else rep.z = std::abs(diff) <= 1e-12 * std::max(1.0, std::abs(rep.exact)) ? 0.0 : std::copysign(INFINITY, diff);
  rep.within_3se = std::abs(rep.z) <= 3;
  return rep;
}

}  // namespace gnm
