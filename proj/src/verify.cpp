#include "gnm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gnm/alpha.hpp"
#include "gnm/errors.hpp"
#include "gnm/extended.hpp"
#include "gnm/graph.hpp"
#include "gnm/oracles.hpp"
#include "gnm/prediction.hpp"
#include "gnm/pw_enum.hpp"
#include "gnm/random.hpp"
#include "gnm/sampling.hpp"

namespace gnm {

void CheckResult::record(bool ok, const std::string& what_failed) {
  ++cases;
  if (ok) return;
  ++failures;
  if (first_failure.empty()) first_failure = what_failed;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string edges_text(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << " edges=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  out << ']';
  return out.str();
}

double rel_error(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// A random graph for fuzzing: n uniform in [n_min, n_max], density uniform in
// [0.1, 0.9]. Stream i of the seed.
Graph fuzz_graph(std::uint64_t seed, std::uint64_t i, int n_min, int n_max) {
  CounterRng rng({seed, i});
  const int n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
  const double p = 0.1 + 0.8 * rng.uniform();
  return sample_gnp(n, p, {seed ^ 0x9e3779b97f4a7c15ULL, i});
}

std::int64_t m_at(std::int64_t n) { return static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(n), 1.3))); }

void lemma1_case(CheckResult& res, const Graph& g) {
  const int alpha = alpha_bruteforce(g).alpha;
  const ExtendedOrderResult brute = max_extended_order(g, ExtendedMode::brute);
  res.record(brute.order == alpha && is_extended_ind_set(g, brute.witness),
             edges_text(g) + " brute order " + std::to_string(brute.order) + " alpha " + std::to_string(alpha));
  const AlphaResult exact = alpha_exact(g);
  bool sound = false;
  try {
    const CandidatePair c = extend_from_mis(g, exact.witness);
    sound = is_extended_ind_set(g, c) && c.order() == alpha &&
            std::includes(c.K.begin(), c.K.end(), exact.witness.begin(), exact.witness.end());
  } catch (const NotMaximum&) {
    sound = false;
  }
  res.record(sound, edges_text(g) + " extend_from_mis failed on a maximum set");
}

}  // namespace

namespace checks {

CheckResult lemma1_exhaustive(int n) {
  CheckResult res;
  res.name = "lemma1-exhaustive";
  res.detail = "max extended order (brute) equals alpha on every graph with " + std::to_string(n) +
               " labeled vertices; extension of a maximum independent set is sound";
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) lemma1_case(res, graph_from_pair_mask(n, mask));
  res.metrics["graphs"] = std::uint64_t{1} << pairs;
  res.finish();
  return res;
}

CheckResult lemma1_random(int count, int n_min, int n_max, std::uint64_t seed) {
  CheckResult res;
  res.name = "lemma1-random";
  res.detail = "as lemma1-exhaustive on " + std::to_string(count) + " random graphs, n in [" + std::to_string(n_min) +
               ", " + std::to_string(n_max) + "]";
  for (int i = 0; i < count; ++i) lemma1_case(res, fuzz_graph(seed, static_cast<std::uint64_t>(i), n_min, n_max));
  res.finish();
  return res;
}

CheckResult augmented_claim(int n) {
  CheckResult res;
  res.name = "augmented-claim";
  res.detail = "max augmented order vs alpha on every graph with " + std::to_string(n) +
               " vertices; mismatches are findings, not failures";
  const int pairs = n * (n - 1) / 2;
  std::uint64_t mismatches = 0;
  std::uint64_t none = 0;
  std::string example;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = graph_from_pair_mask(n, mask);
    const auto aug = max_augmented_order(g);
    ++res.cases;
    if (!aug) ++none;
    if (!aug || *aug != alpha_bruteforce(g).alpha) {
      ++mismatches;
      if (example.empty()) example = edges_text(g) + " augmented " + (aug ? std::to_string(*aug) : "none");
    }
  }
  res.metrics["graphs"] = res.cases;
  res.metrics["mismatches"] = mismatches;
  res.metrics["no_augmented_set"] = none;
  res.metrics["example"] = example;
  res.finish();
  return res;
}

CheckResult counting_order(int count, int n_max, std::uint64_t seed) {
  CheckResult res;
  res.name = "counting-order";
  res.detail = "W <= X <= Z <= U and W <= Y <= Z <= U for every (k, r) on random graphs";
  for (int i = 0; i < count; ++i) {
    const Graph g = fuzz_graph(seed, static_cast<std::uint64_t>(i), 2, n_max);
    for (int k = 0; k <= g.n(); ++k)
      for (int r = 0; r <= k && k + r <= g.n(); ++r) {
        const VariableCounts c = count_variables(g, k, r);
        res.record(c.W <= c.X && c.X <= c.Z && c.Z <= c.U && c.W <= c.Y && c.Y <= c.Z,
                   edges_text(g) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
      }
  }
  res.finish();
  return res;
}

CheckResult classify_fuzz(int count, std::uint64_t seed) {
  CheckResult res;
  res.name = "classify-fuzz";
  res.detail = "flag implications W=>X, W=>Y, X=>Z, Y=>Z, Z=>U on random (G, K, M)";
  for (int i = 0; i < count; ++i) {
    const Graph g = fuzz_graph(seed, static_cast<std::uint64_t>(i), 2, 12);
    CounterRng rng({seed + 7, static_cast<std::uint64_t>(i)});
    CandidatePair c;
    for (int v = 0; v < g.n(); ++v)
      if (rng.below(2)) c.K.push_back(v);
    // Greedy random matching on edges of G[K], sometimes with a non-edge.
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t a = 0; a < c.K.size(); ++a)
      for (std::size_t b = a + 1; b < c.K.size(); ++b) {
        const int u = c.K[a];
        const int v = c.K[b];
        if (used[u] || used[v] || rng.below(3) != 0) continue;
        if (!g.adjacent(u, v) && rng.below(4) != 0) continue;
        if (static_cast<int>(c.M.size()) + 1 > static_cast<int>(c.K.size()) - static_cast<int>(c.M.size()) - 1) continue;
        used[u] = used[v] = 1;
        c.M.emplace_back(u, v);
      }
    const VariableFlags f = classify_pair(g, c);
    res.record(f.implications_hold(), edges_text(g));
  }
  res.finish();
  return res;
}

CheckResult solver_exhaustive(int n) {
  CheckResult res;
  res.name = "solver-exhaustive";
  res.detail = "alpha_exact equals alpha_bruteforce on every graph with " + std::to_string(n) + " labeled vertices";
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = graph_from_pair_mask(n, mask);
    const AlphaResult a = alpha_exact(g);
    res.record(a.alpha == alpha_bruteforce(g).alpha && is_independent(g, a.witness) &&
                   static_cast<int>(a.witness.size()) == a.alpha,
               edges_text(g));
  }
  res.finish();
  return res;
}

CheckResult solver_random(int count, int n_min, int n_max, std::uint64_t seed) {
  CheckResult res;
  res.name = "solver-random";
  res.detail = "alpha_exact equals alpha_bruteforce on " + std::to_string(count) + " random graphs, n in [" +
               std::to_string(n_min) + ", " + std::to_string(n_max) + "]";
  for (int i = 0; i < count; ++i) {
    const Graph g = fuzz_graph(seed, static_cast<std::uint64_t>(i), n_min, n_max);
    const AlphaResult a = alpha_exact(g);
    res.record(a.alpha == alpha_bruteforce(g).alpha && is_independent(g, a.witness) &&
                   static_cast<int>(a.witness.size()) == a.alpha,
               edges_text(g));
  }
  res.finish();
  return res;
}

CheckResult enum_dp(int max_cells) {
  CheckResult res;
  res.name = "enum-dp";
  res.detail = "count_min2_matrices equals brute-force matrix enumeration for every beta*gamma <= " +
               std::to_string(max_cells) + " and every kappa";
  for (int beta = 1; beta <= max_cells; ++beta)
    for (int gamma = 1; beta * gamma <= max_cells; ++gamma) {
      const auto brute = oracle::min2_counts_bruteforce(beta, gamma);
      for (int kappa = 0; kappa <= beta * gamma; ++kappa) {
        const EnumResult e = count_min2_matrices(beta, gamma, kappa);
        const std::string want = std::to_string(brute[static_cast<std::size_t>(kappa)]);
        res.record(e.mode == EnumMode::exact_int && e.exact && *e.exact == want,
                   "beta=" + std::to_string(beta) + " gamma=" + std::to_string(gamma) + " kappa=" +
                       std::to_string(kappa) + " want " + want + " got " + e.exact.value_or("?"));
      }
    }
  res.finish();
  return res;
}

CheckResult enum_recursion(int max_beta, int max_gamma) {
  CheckResult res;
  res.name = "enum-recursion";
  res.detail = "DP counts equal a top-down memoized evaluation of the row recursion";
  for (int beta = 1; beta <= max_beta; ++beta)
    for (int gamma = 1; gamma <= max_gamma; ++gamma)
      for (int kappa = 0; kappa <= beta * gamma; ++kappa) {
        const std::string want = oracle::min2_count_recursive(beta, gamma, kappa);
        const EnumResult e = count_min2_matrices(beta, gamma, kappa);
        res.record(e.exact && *e.exact == want, "beta=" + std::to_string(beta) + " gamma=" + std::to_string(gamma) +
                                                    " kappa=" + std::to_string(kappa));
      }
  res.finish();
  return res;
}

CheckResult enum_modes(int max_beta, int max_gamma) {
  CheckResult res;
  res.name = "enum-modes";
  res.detail = "log-float counts agree with exact counts to 1e-9 relative";
  double worst = 0;
  for (int beta = 1; beta <= max_beta; ++beta)
    for (int gamma = 2; gamma <= max_gamma; ++gamma)
      for (int kappa = 2 * beta; kappa <= beta * gamma; ++kappa) {
        const EnumResult exact = count_min2_matrices(beta, gamma, kappa);
        const EnumResult approx = count_min2_matrices(beta, gamma, kappa, {0});
        const double err = static_cast<double>(std::abs(std::expm1(approx.count.log_value() - exact.count.log_value())));
        worst = std::max(worst, err);
        res.record(approx.mode == EnumMode::log_float && err <= 1e-9,
                   "beta=" + std::to_string(beta) + " gamma=" + std::to_string(gamma) + " kappa=" + std::to_string(kappa));
      }
  res.metrics["worst_rel_error"] = worst;
  res.finish();
  return res;
}

CheckResult phi_identity(int max_n, int max_k, int max_r) {
  CheckResult res;
  res.name = "phi-identity";
  res.detail = "N U Phi (exact mixture) equals E[X_{k,r}] from all edge placements, to 1e-9 relative; the mixture "
               "equals the conditional probability given U";
  double worst = 0;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 0; k <= max_k; ++k)
      for (int r = 0; r <= std::min(k, max_r) && k + r <= n; ++r) {
        const oracle::MomentTable t = oracle::exact_x_moments(n, k, r);
        for (int m = 0; m <= n * (n - 1) / 2; ++m) {
          const Params par(n, m, 0.1);
          const double phi = phi_exact_mixture(n, m, k, r);
          const double predicted = (N_pairs(n, k, r) * U_prob(par, k, r) * LogNumber::from_value(phi)).value();
          const double exact = t.expectation[static_cast<std::size_t>(m)];
          const double err = rel_error(predicted, exact);
          worst = std::max(worst, err);
          const std::string where =
              "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
          res.record(err <= 1e-9, where + " predicted " + std::to_string(predicted) + " exact " + std::to_string(exact));
          if (t.pair_u[static_cast<std::size_t>(m)] > 0) {
            const double conditional = static_cast<double>(t.pair_x[static_cast<std::size_t>(m)]) /
                                       static_cast<double>(t.pair_u[static_cast<std::size_t>(m)]);
            res.record(rel_error(phi, conditional) <= 1e-9, where + " mixture vs conditional");
          }
        }
      }
  res.metrics["worst_rel_error"] = worst;
  res.finish();
  return res;
}

CheckResult hyper_bounds(int cases, int max_population, std::uint64_t seed) {
  CheckResult res;
  res.name = "hyper-bounds";
  res.detail = "Chernoff upper and lower tail bounds dominate exact hypergeometric tails on " + std::to_string(cases) +
               " random (a, b, c, t) cases per tail, a <= " + std::to_string(max_population);
  CounterRng rng({seed, 0x4879});
  double tightest = 0;
  for (int i = 0; i < cases; ++i) {
    const auto a = static_cast<std::int64_t>(2 + rng.below(static_cast<std::uint64_t>(max_population - 1)));
    const auto b = static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(a)));
    const auto c = static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(a)));
    const double mu = static_cast<double>(b) * static_cast<double>(c) / static_cast<double>(a);
    const double t_up = rng.uniform() * (static_cast<double>(std::min(b, c)) - mu + 1);
    const double t_low = rng.uniform() * mu;
    const std::string where = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
    const double up_exact = oracle::hyper_upper_tail(a, b, c, static_cast<std::int64_t>(std::ceil(mu + t_up - 1e-12)));
    const double up_bound = chernoff_hyper(a, b, c, t_up, Tail::upper);
    res.record(up_exact <= up_bound * (1 + 1e-12), where + " upper t=" + std::to_string(t_up));
    const double low_exact = oracle::hyper_lower_tail(a, b, c, static_cast<std::int64_t>(std::floor(mu - t_low + 1e-12)));
    const double low_bound = chernoff_hyper(a, b, c, t_low, Tail::lower);
    res.record(low_exact <= low_bound * (1 + 1e-12), where + " lower t=" + std::to_string(t_low));
    if (up_bound > 0) tightest = std::max(tightest, up_exact / up_bound);
    if (low_bound > 0) tightest = std::max(tightest, low_exact / low_bound);
  }
  res.metrics["max_exact_over_bound"] = tightest;
  res.finish();
  return res;
}

CheckResult janson_exhaustive(int max_N) {
  CheckResult res;
  res.name = "janson";
  res.detail = "Janson-variant bound dominates exact P(X = 0) (worst exceptional set) for N <= " +
               std::to_string(max_N) + ", t in {0, 1, 2}, p in {0.1, ..., 0.9}";
  double tightest = 0;
  for (int N = 1; N <= max_N; ++N)
    for (int t = 0; t <= std::min(2, 2 * N); ++t)
      for (int j = 1; j <= 9; ++j) {
        const double p = j / 10.0;
        const double exact = oracle::janson_exact_no_low_degree(N, t, p);
        const JansonBound b = janson_variant_bound(N, t, p);
        res.record(exact <= b.bound * (1 + 1e-12),
                   "N=" + std::to_string(N) + " t=" + std::to_string(t) + " p=" + std::to_string(p) + " exact " +
                       std::to_string(exact) + " bound " + std::to_string(b.bound));
        tightest = std::max(tightest, exact / b.bound);
      }
  res.metrics["max_exact_over_bound"] = tightest;
  res.finish();
  return res;
}

CheckResult local_clt(std::int64_t beta, const std::vector<double>& cs) {
  CheckResult res;
  res.name = "local-clt";
  res.detail = "P(sum of beta truncated Poissons = kappa) within 5% of 1/sqrt(2 pi kappa (1 + eta_c - c)), beta = " +
               std::to_string(beta);
  for (double c : cs) {
    const auto kappa = static_cast<std::int64_t>(std::llround(c * static_cast<double>(beta)));
    const double cc = static_cast<double>(kappa) / static_cast<double>(beta);
    const double lambda = solve_lambda_c(cc);
    const SumProb exact = sum_prob_exact(beta, lambda, kappa);
    const double predicted =
        1 / std::sqrt(2 * std::numbers::pi * static_cast<double>(kappa) * (1 + eta_bar(cc) - cc));
    const double err = std::abs(exact.value / predicted - 1);
    res.metrics["c=" + std::to_string(static_cast<int>(c))] = {
        {"kappa", kappa}, {"exact", exact.value}, {"predicted", predicted}, {"rel_error", err}};
    res.record(err <= 0.05, "c=" + std::to_string(c) + " rel error " + std::to_string(err));
  }
  res.finish();
  return res;
}

CheckResult enum_trend() {
  CheckResult res;
  res.name = "enum-trend";
  res.detail = "gamma = ceil(beta^0.7), kappa = ceil(0.75 beta ln beta): ln f / (beta ln(1 - (c+1)e^-c)) in [0.9, 1.1] "
               "at beta = 200 and closer to 1 at beta = 400 than at beta = 100";
  std::vector<double> ratios;
  for (std::int64_t beta : {100, 200, 400}) {
    const auto b = static_cast<double>(beta);
    const auto gamma = static_cast<std::int64_t>(std::ceil(std::pow(b, 0.7)));
    const auto kappa = static_cast<std::int64_t>(std::ceil(0.75 * b * std::log(b)));
    const EnumResult e = count_min2_matrices(beta, gamma, kappa);
    const MainTerm main = f_main_term(beta, kappa);
    const double ratio = static_cast<double>(e.f.log_value() / main.log_value);
    ratios.push_back(ratio);
    res.metrics["beta=" + std::to_string(beta)] = {{"gamma", gamma},   {"kappa", kappa},
                                                   {"c", static_cast<double>(kappa) / b},
                                                   {"log_f", static_cast<double>(e.f.log_value())},
                                                   {"log_main", static_cast<double>(main.log_value)},
                                                   {"ratio", ratio},   {"mode", to_string(e.mode)}};
  }
  res.record(ratios[1] >= 0.9 && ratios[1] <= 1.1, "ratio at beta=200 is " + std::to_string(ratios[1]));
  res.record(std::abs(ratios[2] - 1) < std::abs(ratios[0] - 1),
             "ratio at beta=400 (" + std::to_string(ratios[2]) + ") not closer to 1 than at beta=100 (" +
                 std::to_string(ratios[0]) + ")");
  res.finish();
  return res;
}

namespace {

const std::vector<std::string> kLemmaRows = {"N_k", "N_r", "U_k", "U_r", "phi_k", "phi_r"};

struct RatioRun {
  std::int64_t n;
  std::int64_t k;
  std::int64_t r;
  std::vector<RatioRow> rows;
};

std::vector<RatioRun> ratio_runs(const std::vector<std::int64_t>& ns) {
  std::vector<RatioRun> runs;
  for (std::int64_t n : ns) {
    const Params par(n, m_at(n), 0.1);
    const std::int64_t k = k_vanilla(par);
    for (std::int64_t r : {std::int64_t{0}, r0_argmax(par, k)}) runs.push_back({n, k, r, ratio_suite(par, k, r)});
  }
  return runs;
}

const RatioRow* find_row(const RatioRun& run, const std::string& name) {
  for (const RatioRow& row : run.rows)
    if (row.name == name) return &row;
  return nullptr;
}

}  // namespace

CheckResult ratio_lemmas(const std::vector<std::int64_t>& ns) {
  CheckResult res;
  res.name = "ratio-lemmas";
  res.detail = "m = ceil(n^1.3), k = k_V, r in {0, r_0}: every ratio-lemma main term within 5% at the largest n, "
               "error decreasing in n, and the N ratio over r exact at every n";
  const std::vector<RatioRun> runs = ratio_runs(ns);
  const std::int64_t largest = ns.back();
  for (const RatioRun& run : runs) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (const RatioRow& row : run.rows)
      rows[row.name] = {{"computed", row.computed}, {"predicted", row.predicted}, {"rel_error", row.rel_error}};
    res.metrics["n=" + std::to_string(run.n) + ",r=" + std::to_string(run.r)] = {{"k", run.k}, {"rows", rows}};
  }
  // Informational: the same rows at the first hump of x_prime in r.
  for (std::int64_t n : ns) {
    const Params par(n, m_at(n), 0.1);
    const std::int64_t k = k_vanilla(par);
    const std::int64_t r = r0_first_hump(par, k);
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (const RatioRow& row : ratio_suite(par, k, r))
      rows[row.name] = {{"computed", row.computed}, {"predicted", row.predicted}, {"rel_error", row.rel_error}};
    res.metrics["n=" + std::to_string(n) + ",r=first_hump"] = {{"k", k}, {"r", r}, {"rows", rows}};
  }
  for (const std::string& name : kLemmaRows)
    for (int slot = 0; slot < 2; ++slot) {
      const std::string label = name + (slot == 0 ? " r=0" : " r=r_0");
      std::vector<double> errors;
      for (std::size_t i = slot; i < runs.size(); i += 2) errors.push_back(find_row(runs[i], name)->rel_error);
      if (name == "N_r") {
        const bool exact = std::all_of(errors.begin(), errors.end(), [](double e) { return e <= 1e-9; });
        res.record(exact, label + " is not exact");
        continue;
      }
      res.record(errors.back() <= 0.05, label + " error " + std::to_string(errors.back()) + " at n=" + std::to_string(largest));
      bool decreasing = true;
      for (std::size_t i = 1; i < errors.size(); ++i) decreasing = decreasing && errors[i] < errors[i - 1];
      res.record(decreasing, label + " error does not decrease in n");
    }
  res.finish();
  return res;
}

CheckResult ratio_convergence(const std::vector<std::int64_t>& ns) {
  CheckResult res;
  res.name = "ratio-convergence";
  res.detail = "every ratio-suite error at k = k_V, r = 0 decreases as n grows";
  const std::vector<RatioRun> runs = ratio_runs(ns);
  for (const RatioRow& row : runs.front().rows) {
    std::vector<double> errors;
    for (std::size_t i = 0; i < runs.size(); i += 2) errors.push_back(find_row(runs[i], row.name)->rel_error);
    bool decreasing = true;
    for (std::size_t i = 1; i < errors.size(); ++i) decreasing = decreasing && errors[i] <= errors[i - 1];
    res.metrics[row.name] = errors;
    res.record(decreasing || errors.back() <= 1e-9, row.name + " error does not decrease in n");
  }
  res.finish();
  return res;
}

CheckResult threshold_relations(std::int64_t n) {
  CheckResult res;
  res.name = "threshold-relations";
  res.detail = "(k_V - k_0) e^2 n / k_V^2 in [0.8, 1.25] and r0_argmax(k_V) within 20% of k^3 p / (2 e^2 n), m = ceil(n^1.3)";
  const Params par(n, m_at(n), 0.1);
  const std::int64_t kv = k_vanilla(par);
  const std::int64_t k0 = k_zero(par);
  const double e2 = std::exp(2.0);
  const double gap = static_cast<double>(kv - k0) * e2 * static_cast<double>(n) / (static_cast<double>(kv) * static_cast<double>(kv));
  const std::int64_t r0 = r0_argmax(par, kv);
  const double formula = r0_formula(par, kv);
  const double ratio = static_cast<double>(r0) / formula;
  res.metrics = {{"n", n},        {"m", par.m()},          {"k_V", kv},
                 {"k_0", k0},      {"gap_statistic", gap},  {"r0_argmax", r0},
                 {"r0_formula", formula}, {"r0_formula_without_p", r0_formula_without_p(par, kv)},
                 {"r0_ratio", ratio}, {"r0_first_hump", r0_first_hump(par, kv)}};
  res.record(gap >= 0.8 && gap <= 1.25, "gap statistic " + std::to_string(gap));
  res.record(std::abs(ratio - 1) <= 0.2, "r0_argmax / formula = " + std::to_string(ratio));
  res.finish();
  return res;
}

CheckResult first_moment(std::int64_t n) {
  CheckResult res;
  res.name = "first-moment-sum";
  res.detail = "sum over r <= r_1 of X' divided by sqrt(r_0) X'(r_0) in [1, 10] at k = k_0, m = ceil(n^1.3)";
  const Params par(n, m_at(n), 0.1);
  const std::int64_t k0 = k_zero(par);
  const FirstMomentSum s = first_moment_sum(par, k0);
  res.metrics = {{"n", n}, {"k_0", k0}, {"r_0", s.r0}, {"r_0_first_hump", r0_first_hump(par, k0)},
                 {"log_sum", static_cast<double>(s.sum.log_value())},
                 {"gaussian_heuristic", std::sqrt(2 * std::numbers::pi)}};
  res.metrics["ratio"] = s.ratio ? nlohmann::ordered_json(*s.ratio) : nlohmann::ordered_json(nullptr);
  res.record(s.ratio && *s.ratio >= 1 && *s.ratio <= 10, "ratio " + (s.ratio ? std::to_string(*s.ratio) : "undefined"));
  res.finish();
  return res;
}

CheckResult k_vanilla_window(std::int64_t n) {
  CheckResult res;
  res.name = "k-vanilla-window";
  res.detail = "|k_V - (2/p)(ln np - ln ln np + ln(e/2))| p / 2 <= 0.05, m = ceil(n^1.3)";
  const Params par(n, m_at(n), 0.1);
  const PredictionReport rep = predict(par);
  res.metrics = {{"n", n}, {"k_V", rep.k_V}, {"formula", rep.k_V_formula}, {"window", rep.k_V_window}};
  res.record(rep.k_V_window <= rep.window_band, "window " + std::to_string(rep.k_V_window));
  res.finish();
  return res;
}

}  // namespace checks

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma1", "enum-dp", "bounds", "ratios", "clt", "janson"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = name;
  if (name == "lemma1") {
    rep.checks.push_back(checks::lemma1_exhaustive(6));
    rep.checks.push_back(checks::lemma1_random(10000, 7, 12, seed));
    rep.checks.push_back(checks::counting_order(300, 7, seed));
    rep.checks.push_back(checks::classify_fuzz(2000, seed));
    rep.checks.push_back(checks::augmented_claim(6));
  } else if (name == "enum-dp") {
    rep.checks.push_back(checks::enum_dp(20));
    rep.checks.push_back(checks::enum_recursion(6, 6));
    rep.checks.push_back(checks::enum_modes(8, 8));
    rep.checks.push_back(checks::phi_identity(7, 4, 1));
  } else if (name == "bounds") {
    rep.checks.push_back(checks::hyper_bounds(200, 60, seed));
    rep.checks.push_back(checks::janson_exhaustive(3));
  } else if (name == "ratios") {
    const std::vector<std::int64_t> ns = {100000, 1000000, 10000000};
    rep.checks.push_back(checks::ratio_lemmas(ns));
    rep.checks.push_back(checks::ratio_convergence(ns));
    rep.checks.push_back(checks::threshold_relations(1000000));
    rep.checks.push_back(checks::first_moment(1000000));
    rep.checks.push_back(checks::k_vanilla_window(1000000));
  } else if (name == "clt") {
    rep.checks.push_back(checks::local_clt(500, {4, 6, 8}));
    rep.checks.push_back(checks::enum_trend());
  } else if (name == "janson") {
    rep.checks.push_back(checks::janson_exhaustive(3));
  } else {
    throw InputError("unknown suite '" + name + "'");
  }
  return rep;
}

}  // namespace gnm
