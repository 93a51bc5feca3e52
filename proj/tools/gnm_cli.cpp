// gnm: command-line front end for the G(n, m) independence-number toolkit.
//
// Exit codes: 0 success, 1 input error, 2 verification failure, 3 node budget
// exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gnm/alpha.hpp"
#include "gnm/config.hpp"
#include "gnm/errors.hpp"
#include "gnm/experiments.hpp"
#include "gnm/extended.hpp"
#include "gnm/graph.hpp"
#include "gnm/prediction.hpp"
#include "gnm/pw_enum.hpp"
#include "gnm/reports.hpp"
#include "gnm/sampling.hpp"
#include "gnm/verify.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;
constexpr int kBudget = 3;

// Flags that were actually given, as config key/values.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::string config_file;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>("--" + key, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) std::cout << text;
  else gnm::write_text_file(path, text);
}

gnm::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gnm::InputError("cannot open graph file " + path);
  return gnm::read_graph(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact independence numbers, first-moment predictions and enumeration checks for G(n, m)"};
  app.require_subcommand(1);
  int exit_code = 0;

  // predict
  FlagSet predict_flags;
  auto* predict = app.add_subcommand("predict", "k_V, k_0, r_0, r_1 and the predicted interval as JSON");
  for (const char* key : {"n", "m", "eps", "out"}) predict_flags.add(predict, key, std::string("set ") + key);
  predict->add_option("--config", predict_flags.config_file, "key=value config file");
  predict->callback([&] {
    gnm::ExperimentConfig defaults;
    defaults.kind = "predict";
    const auto cfg = gnm::resolve_config(defaults, predict_flags.config_file, predict_flags.values);
    gnm::validate(cfg);
    const gnm::Params par(cfg.n, *cfg.m, cfg.eps);
    emit(gnm::dump(gnm::to_json(gnm::predict(par))), cfg.out);
  });

  // alpha
  std::string alpha_file;
  std::string alpha_out;
  std::uint64_t alpha_budget = gnm::AlphaOptions{}.node_budget;
  bool alpha_extended = false;
  auto* alpha = app.add_subcommand("alpha", "exact independence number of a graph file");
  alpha->add_option("graph", alpha_file, "graph file: 'n m' then 'u v' lines")->required();
  alpha->add_option("--budget", alpha_budget, "search node budget");
  alpha->add_flag("--extended", alpha_extended, "also build an extended independent set of the same order");
  alpha->add_option("--out", alpha_out, "output path (default stdout)");
  alpha->callback([&] {
    const gnm::Graph g = load_graph(alpha_file);
    const gnm::AlphaResult res = gnm::alpha_exact(g, {alpha_budget});
    gnm::Json j = gnm::to_json(res);
    if (alpha_extended) {
      const gnm::CandidatePair c = gnm::extend_from_mis(g, res.witness);
      j["extended"] = {{"K", c.K}, {"M", c.M}, {"order", c.order()}};
    }
    emit(gnm::dump(j), alpha_out);
  });

  // sample
  int sample_n = 0;
  std::optional<std::int64_t> sample_m;
  std::optional<double> sample_p;
  std::uint64_t sample_seed = 0;
  std::uint64_t sample_stream = 0;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "draw G(n, m) or G(n, p) and print it in the graph text format");
  sample->add_option("--n", sample_n, "vertices")->required();
  auto* m_opt = sample->add_option("--m", sample_m, "edges (G(n, m))");
  sample->add_option("--p", sample_p, "edge probability (G(n, p))")->excludes(m_opt);
  sample->add_option("--seed", sample_seed, "master seed");
  sample->add_option("--stream", sample_stream, "stream index");
  sample->add_option("--out", sample_out, "output path (default stdout)");
  sample->callback([&] {
    if (sample_m.has_value() == sample_p.has_value()) throw gnm::InputError("give exactly one of --m and --p");
    const gnm::SeedSpec seed{sample_seed, sample_stream};
    const gnm::Graph g = sample_m ? gnm::sample_gnm(sample_n, *sample_m, seed) : gnm::sample_gnp(sample_n, *sample_p, seed);
    std::ostringstream text;
    gnm::write_graph(text, g);
    emit(text.str(), sample_out);
  });

  // count
  std::string count_file;
  int count_k = -1;
  int count_r = -1;
  std::string count_out;
  auto* count = app.add_subcommand("count", "exact U/W/X/Y/Z counts of a graph file");
  count->add_option("graph", count_file, "graph file")->required();
  count->add_option("--k", count_k, "order")->required();
  count->add_option("--r", count_r, "matching size")->required();
  count->add_option("--out", count_out, "output path (default stdout)");
  count->callback([&] {
    const gnm::Graph g = load_graph(count_file);
    gnm::Json j = {{"n", g.n()}, {"m", g.m()}, {"k", count_k}, {"r", count_r}};
    j["counts"] = gnm::to_json(gnm::count_variables(g, count_k, count_r));
    emit(gnm::dump(j), count_out);
  });

  // enumerate
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t kappa = 0;
  std::uint64_t exact_budget = gnm::EnumOptions{}.exact_budget;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "count beta x gamma 0-1 matrices with kappa ones and row sums >= 2");
  enumerate->add_option("--beta", beta, "rows")->required();
  enumerate->add_option("--gamma", gamma, "columns")->required();
  enumerate->add_option("--kappa", kappa, "ones")->required();
  enumerate->add_option("--exact-budget", exact_budget, "largest beta*gamma*kappa counted with exact integers");
  enumerate->add_option("--out", enum_out, "output path (default stdout)");
  enumerate->callback([&] { emit(gnm::dump(gnm::to_json(gnm::count_min2_matrices(beta, gamma, kappa, {exact_budget}))), enum_out); });

  // phi-exact
  std::int64_t pn = 0, pm = 0, pk = 0, pr = 0;
  std::string phi_out;
  auto* phi = app.add_subcommand("phi-exact", "exact Phi for one (n, m, k, r) and the resulting N U Phi");
  phi->add_option("--n", pn, "vertices")->required();
  phi->add_option("--m", pm, "edges")->required();
  phi->add_option("--k", pk, "order")->required();
  phi->add_option("--r", pr, "matching size")->required();
  phi->add_option("--out", phi_out, "output path (default stdout)");
  phi->callback([&] {
    const gnm::Params par(pn, pm, 0.1);
    const double value = gnm::phi_exact_mixture(pn, pm, pk, pr);
    const gnm::LogNumber N = gnm::N_pairs(pn, pk, pr);
    const gnm::LogNumber U = gnm::U_prob(par, pk, pr);
    gnm::Json j = {{"n", pn}, {"m", pm}, {"k", pk}, {"r", pr}, {"phi_exact", value}};
    j["phi_power"] = gnm::phi_power(par, pk, pr).value();
    j["log_N"] = static_cast<double>(N.log_value());
    j["U"] = U.value();
    j["expected_X"] = (N * U * gnm::LogNumber::from_value(value)).value();
    emit(gnm::dump(j), phi_out);
  });

  // verify
  std::string suite;
  std::uint64_t verify_seed = 0;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "run an invariant battery: lemma1, enum-dp, bounds, ratios, clt, janson");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--seed", verify_seed, "seed for randomized cases");
  verify->add_option("--out", verify_out, "output path (default stdout)");
  verify->callback([&] {
    const gnm::SuiteReport rep = gnm::run_suite(suite, verify_seed);
    emit(gnm::dump(gnm::to_json(rep)), verify_out);
    if (!rep.passed()) exit_code = kVerifyFailed;
  });

  // experiment
  std::string kind;
  FlagSet exp_flags;
  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo experiments: concentration, xkr");
  experiment->add_option("kind", kind, "experiment kind")->required()->check(CLI::IsMember({"concentration", "xkr"}));
  for (const char* key : {"n", "m", "eps", "trials", "seed", "budget", "k", "r", "threads", "out", "csv"})
    exp_flags.add(experiment, key, std::string("set ") + key);
  experiment->add_option("--config", exp_flags.config_file, "key=value config file");
  experiment->callback([&] {
    gnm::ExperimentConfig defaults;
    defaults.kind = kind;
    auto cfg = gnm::resolve_config(defaults, exp_flags.config_file, exp_flags.values);
    cfg.kind = kind;
    gnm::validate(cfg);
    if (kind == "concentration") {
      const gnm::ConcentrationRun run = gnm::run_concentration(cfg);
      if (!cfg.csv.empty()) gnm::write_text_file(cfg.csv, gnm::trials_csv(run.rows));
      emit(gnm::dump(gnm::to_json(run.summary)), cfg.out);
      if (run.summary.failures > 0) exit_code = kBudget;
    } else {
      emit(gnm::dump(gnm::to_json(gnm::run_xkr(cfg))), cfg.out);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  } catch (const gnm::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const gnm::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "; best independent set found has size " << e.best_bound() << '\n';
    return kBudget;
  } catch (const gnm::NotMaximum& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return exit_code;
}
