#include <gtest/gtest.h>
#include <sys/wait.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gnm/config.hpp"
#include "gnm/errors.hpp"
#include "gnm/experiments.hpp"
#include "gnm/reports.hpp"
#include "gnm/verify.hpp"

using namespace gnm;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("gnm_harness_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GNM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_output(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const std::string cmd = std::string(GNM_CLI_PATH) + " " + args + " >" + out.string() + " 2>/dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0) << args;
  return slurp(out);
}

ExperimentConfig concentration_config(std::int64_t n, std::int64_t m, std::int64_t trials) {
  ExperimentConfig cfg;
  cfg.kind = "concentration";
  cfg.n = n;
  cfg.m = m;
  cfg.trials = trials;
  cfg.seed = 11;
  return cfg;
}

}  // namespace

TEST(Config, ParseKeyValues) {
  std::istringstream in("# comment\n\nn = 100\nm=399\n  trials =  5 \n");
  const KeyValues kv = parse_key_values(in);
  EXPECT_EQ(kv.at("n"), "100");
  EXPECT_EQ(kv.at("m"), "399");
  EXPECT_EQ(kv.at("trials"), "5");
  std::istringstream bad("n 100\n");
  EXPECT_THROW(parse_key_values(bad), InputError);
  std::istringstream dup("n=1\nn=2\n");
  EXPECT_THROW(parse_key_values(dup), InputError);
}

TEST(Config, PrecedenceFlagsOverFileOverDefaults) {
  const fs::path file = scratch_dir() / "cfg.txt";
  write_text_file(file.string(), "n = 100\nm = 399\ntrials = 7\nseed = 3\n");
  ExperimentConfig defaults;
  defaults.kind = "concentration";
  defaults.trials = 1;
  defaults.eps = 0.2;
  const ExperimentConfig cfg = resolve_config(defaults, file.string(), {{"trials", "9"}});
  EXPECT_EQ(cfg.n, 100);
  EXPECT_EQ(cfg.m, 399);
  EXPECT_EQ(cfg.trials, 9);
  EXPECT_EQ(cfg.seed, 3U);
  EXPECT_DOUBLE_EQ(cfg.eps, 0.2);
  EXPECT_THROW(resolve_config(defaults, file.string(), {{"bogus", "1"}}), InputError);
  EXPECT_THROW(resolve_config(defaults, file.string(), {{"n", "ten"}}), InputError);
}

TEST(Config, RoundTripAndValidation) {
  ExperimentConfig cfg = concentration_config(100, 399, 200);
  cfg.budget = 1'000'000;
  cfg.out = "a.json";
  std::istringstream in(to_key_values(cfg));
  ExperimentConfig back;
  apply_key_values(back, parse_key_values(in));
  EXPECT_EQ(back, cfg);
  EXPECT_NO_THROW(validate(cfg));

  ExperimentConfig both = cfg;
  both.p = 0.1;
  EXPECT_THROW(validate(both), InputError);
  ExperimentConfig zero = cfg;
  zero.trials = 0;
  EXPECT_THROW(validate(zero), InputError);
  ExperimentConfig xkr = cfg;
  xkr.kind = "xkr";
  xkr.n = 6;
  xkr.m = 9;
  xkr.k = 1;
  xkr.r = 2;
  EXPECT_THROW(validate(xkr), InputError);
}

TEST(ParallelFor, EachIndexOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, 4, [&](std::int64_t i) { ++hits[i]; });
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(Concentration, DeterministicAcrossThreadCounts) {
  ExperimentConfig cfg = concentration_config(60, 210, 24);
  cfg.threads = 1;
  const ConcentrationRun a = run_concentration(cfg);
  cfg.threads = 3;
  const ConcentrationRun b = run_concentration(cfg);
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(trials_csv(a.rows), trials_csv(b.rows));
  EXPECT_EQ(dump(to_json(a.summary)), dump(to_json(b.summary)));

  const std::vector<TrialRow> subset = run_concentration_trials(cfg, {17, 3});
  ASSERT_EQ(subset.size(), 2U);
  EXPECT_EQ(subset[0], a.rows[17]);
  EXPECT_EQ(subset[1], a.rows[3]);
}

TEST(Concentration, SummaryInvariants) {
  const ConcentrationRun run = run_concentration(concentration_config(50, 160, 30));
  const ConcentrationSummary& s = run.summary;
  double total = 0;
  for (const auto& [alpha, freq] : s.pmf) total += freq;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_GE(s.coverage, 0.0);
  EXPECT_LE(s.coverage, 1.0);
  EXPECT_EQ(s.support_width, s.support_max - s.support_min + 1);
  ASSERT_EQ(s.interval.size(), 2U);
  EXPECT_EQ(s.interval[1], s.k_0);
  for (std::size_t i = 0; i < run.rows.size(); ++i) {
    EXPECT_EQ(run.rows[i].trial, static_cast<std::int64_t>(i));
    EXPECT_EQ(run.rows[i].stream, i);
  }
}

TEST(Concentration, SingleTrialIsPointMass) {
  const ConcentrationRun run = run_concentration(concentration_config(40, 120, 1));
  ASSERT_EQ(run.summary.pmf.size(), 1U);
  EXPECT_EQ(run.summary.pmf[0].second, 1.0);
  EXPECT_EQ(run.summary.support_width, 1);
}

TEST(Concentration, BudgetFailuresAreCounted) {
  ExperimentConfig cfg = concentration_config(80, 300, 4);
  cfg.budget = 5;
  const ConcentrationRun run = run_concentration(cfg);
  EXPECT_EQ(run.summary.failures, 4);
  for (const TrialRow& row : run.rows) EXPECT_TRUE(row.failed);
}

TEST(Reports, CsvAndJsonRoundTrip) {
  const ConcentrationRun run = run_concentration(concentration_config(50, 160, 12));
  const std::string csv = trials_csv(run.rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "trial,seed,stream,alpha,nodes,status");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  std::istringstream in(csv);
  EXPECT_EQ(read_trials_csv(in), run.rows);

  const Json j = to_json(run.summary);
  const ConcentrationSummary back = concentration_from_json(Json::parse(dump(j)));
  EXPECT_EQ(dump(to_json(back)), dump(j));
}

TEST(Reports, EnumJsonFields) {
  const Json j = to_json(count_min2_matrices(2, 3, 4));
  for (const char* key : {"beta", "gamma", "kappa", "c", "log_C", "log_f", "mode"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["mode"], "exact-int");
}

TEST(Reports, PredictionJsonFields) {
  const Json j = to_json(predict(Params(1000, 7944)));
  for (const char* key : {"k_V", "k_0", "r_0", "r_1", "interval", "eps", "n", "m", "p"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Xkr, SmallInstance) {
  ExperimentConfig cfg;
  cfg.kind = "xkr";
  cfg.n = 6;
  cfg.m = 9;
  cfg.k = 2;
  cfg.r = 0;
  cfg.trials = 20'000;
  cfg.seed = 5;
  const XkrReport rep = run_xkr(cfg);
  EXPECT_NEAR(rep.exact, 15 * 0.4 * 6.0 / 2002, 1e-12);
  EXPECT_TRUE(rep.within_3se) << "z = " << rep.z;

  cfg.m = 15;
  const XkrReport dense = run_xkr(cfg);
  EXPECT_EQ(dense.mc_mean, 0.0);
  EXPECT_EQ(dense.exact, 0.0);
  cfg.n = 13;
  EXPECT_THROW(run_xkr(cfg), InputError);
}

TEST(Verify, SuitesRun) {
  EXPECT_EQ(suite_names().size(), 6U);
  for (const char* name : {"enum-dp", "janson"}) {
    const SuiteReport rep = run_suite(name);
    EXPECT_TRUE(rep.passed()) << dump(to_json(rep));
  }
  EXPECT_THROW(run_suite("nope"), InputError);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch_dir();
  EXPECT_EQ(run_cli("predict --n 1000 --m 7944"), 0);
  EXPECT_EQ(run_cli("predict --n 10 --m 0"), 0);
  EXPECT_EQ(run_cli("predict --n 10 --m 46"), 1);
  EXPECT_EQ(run_cli("verify nope"), 1);
  EXPECT_EQ(run_cli("verify janson"), 0);
  EXPECT_EQ(run_cli("enumerate --beta 1 --gamma 5 --kappa 0"), 0);
  EXPECT_EQ(run_cli("experiment xkr --n 6 --m 9 --k 1 --r 2 --trials 10"), 1);
  EXPECT_EQ(run_cli("alpha " + (dir / "missing.txt").string()), 1);

  write_text_file((dir / "g.txt").string(), cli_output("sample --n 90 --m 350 --seed 2"));
  EXPECT_EQ(run_cli("alpha " + (dir / "g.txt").string()), 0);
  EXPECT_EQ(run_cli("alpha --budget 3 " + (dir / "g.txt").string()), 3);
}

TEST(Cli, EnumerateOutput) {
  const Json j = Json::parse(cli_output("enumerate --beta 2 --gamma 3 --kappa 4"));
  EXPECT_EQ(j["C"], "9");
  EXPECT_NEAR(j["f"].get<double>(), 0.6, 1e-14);
  const Json big = Json::parse(cli_output("enumerate --beta 500 --gamma 80 --kappa 1553"));
  EXPECT_EQ(big["mode"], "log-float");
}

TEST(Cli, ExperimentBytesAreReproducible) {
  const fs::path dir = scratch_dir();
  const std::string base = "experiment concentration --n 50 --m 160 --trials 10 --seed 4 ";
  ASSERT_EQ(run_cli(base + "--threads 1 --out " + (dir / "a.json").string() + " --csv " + (dir / "a.csv").string()), 0);
  ASSERT_EQ(run_cli(base + "--threads 2 --out " + (dir / "b.json").string() + " --csv " + (dir / "b.csv").string()), 0);
  EXPECT_EQ(slurp(dir / "a.csv"), slurp(dir / "b.csv"));
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
  EXPECT_FALSE(slurp(dir / "a.csv").empty());
}
