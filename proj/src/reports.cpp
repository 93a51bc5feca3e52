#include "gnm/reports.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gnm/errors.hpp"

namespace gnm {

namespace {

double ld(long double x) { return static_cast<double>(x); }

}  // namespace

Json to_json(const PredictionReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["p"] = rep.p;
  j["eps"] = rep.eps;
  j["k_V"] = rep.k_V;
  j["k_0"] = rep.k_0;
  j["r_0"] = rep.r_0;
  j["r_0_first_hump"] = rep.r_0_first_hump;
  j["r_1"] = rep.r_1;
  j["interval"] = rep.interval;
  j["r_1_value"] = rep.r_1_value;
  j["r_0_formula"] = rep.r_0_formula;
  j["r_0_formula_without_p"] = rep.r_0_formula_without_p;
  j["k_V_formula"] = rep.k_V_formula;
  j["k_V_window"] = rep.k_V_window;
  j["window_band"] = rep.window_band;
  j["regime"] = {{"above_lower_edge", rep.regime_lower}, {"below_upper_edge", rep.regime_upper}};
  Json table = Json::array();
  for (const PredictionRow& row : rep.table)
    table.push_back({{"k", row.k},
                     {"r_0_first_hump", row.r0},
                     {"log_N", ld(row.log_N)},
                     {"log_U", ld(row.log_U)},
                     {"log_phi_power", ld(row.log_phi_power)},
                     {"log_x_prime", ld(row.log_x_prime)}});
  j["table"] = table;
  j["warnings"] = rep.warnings;
  return j;
}

Json to_json(const EnumResult& res) {
  Json j;
  j["beta"] = res.beta;
  j["gamma"] = res.gamma;
  j["kappa"] = res.kappa;
  j["c"] = res.c();
  j["log_C"] = res.count.is_zero() ? Json(nullptr) : Json(ld(res.count.log_value()));
  j["log_f"] = res.f.is_zero() ? Json(nullptr) : Json(ld(res.f.log_value()));
  j["f"] = res.f.value();
  j["mode"] = to_string(res.mode);
  j["C"] = res.exact ? Json(*res.exact) : Json(nullptr);
  return j;
}

Json to_json(const AlphaResult& res) {
  return {{"alpha", res.alpha}, {"witness", res.witness}, {"nodes_explored", res.nodes_explored}};
}

Json to_json(const VariableCounts& c) { return {{"U", c.U}, {"W", c.W}, {"X", c.X}, {"Y", c.Y}, {"Z", c.Z}}; }

Json to_json(const ConcentrationSummary& s) {
  Json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["eps"] = s.eps;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["k_0"] = s.k_0;
  j["k_V"] = s.k_V;
  j["interval"] = s.interval;
  Json pmf = Json::array();
  for (const auto& [alpha, freq] : s.pmf) pmf.push_back({{"alpha", alpha}, {"frequency", freq}});
  j["pmf"] = pmf;
  j["coverage"] = s.coverage;
  j["support_min"] = s.support_min;
  j["support_max"] = s.support_max;
  j["support_width"] = s.support_width;
  j["median"] = s.median;
  j["median_offset"] = s.median_offset;
  j["failures"] = s.failures;
  j["band"] = {{"max_support_width", s.band_width},
               {"max_median_offset", s.band_median},
               {"note", "calibration choice; the two-point statement is asymptotic"}};
  j["within_band"] = s.within_band;
  return j;
}

ConcentrationSummary concentration_from_json(const Json& j) {
  ConcentrationSummary s;
  s.n = j.at("n");
  s.m = j.at("m");
  s.eps = j.at("eps");
  s.trials = j.at("trials");
  s.seed = j.at("seed");
  s.k_0 = j.at("k_0");
  s.k_V = j.at("k_V");
  s.interval = j.at("interval").get<std::vector<std::int64_t>>();
  for (const Json& e : j.at("pmf")) s.pmf.emplace_back(e.at("alpha").get<int>(), e.at("frequency").get<double>());
  s.coverage = j.at("coverage");
  s.support_min = j.at("support_min");
  s.support_max = j.at("support_max");
  s.support_width = j.at("support_width");
  s.median = j.at("median");
  s.median_offset = j.at("median_offset");
  s.failures = j.at("failures");
  s.band_width = j.at("band").at("max_support_width");
  s.band_median = j.at("band").at("max_median_offset");
  s.within_band = j.at("within_band");
  return s;
}

Json to_json(const XkrReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["k"] = rep.k;
  j["r"] = rep.r;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["mc_mean"] = rep.mc_mean;
  j["std_error"] = rep.std_error;
  j["log_N"] = rep.log_N;
  j["U"] = rep.U;
  j["phi_exact"] = rep.phi;
  j["exact"] = rep.exact;
  j["z"] = rep.z;
  j["within_3se"] = rep.within_3se;
  return j;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["cases"] = c.cases;
  j["failures"] = c.failures;
  j["detail"] = c.detail;
  j["first_failure"] = c.first_failure.empty() ? Json(nullptr) : Json(c.first_failure);
  j["metrics"] = c.metrics;
  return j;
}

Json to_json(const SuiteReport& rep) {
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) checks.push_back(to_json(c));
  return {{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_trials_csv(std::ostream& out, const std::vector<TrialRow>& rows) {
  out << "trial,seed,stream,alpha,nodes,status\n";
  for (const TrialRow& r : rows)
    out << r.trial << ',' << r.seed << ',' << r.stream << ',' << r.alpha << ',' << r.nodes << ','
        << (r.failed ? "budget-exceeded" : "ok") << '\n';
}

std::string trials_csv(const std::vector<TrialRow>& rows) {
  std::ostringstream out;
  write_trials_csv(out, rows);
  return out.str();
}

std::vector<TrialRow> read_trials_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "trial,seed,stream,alpha,nodes,status") throw InputError("bad trials CSV header");
  std::vector<TrialRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    TrialRow r;
    std::string status;
    char c1, c2, c3, c4, c5;
    if (!(fields >> r.trial >> c1 >> r.seed >> c2 >> r.stream >> c3 >> r.alpha >> c4 >> r.nodes >> c5) || c1 != ',' ||
        c2 != ',' || c3 != ',' || c4 != ',' || c5 != ',')
      throw InputError("bad trials CSV row: " + line);
    std::getline(fields, status);
    if (status != "ok" && status != "budget-exceeded") throw InputError("bad trial status: " + status);
    r.failed = status != "ok";
    rows.push_back(r);
  }
  return rows;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace gnm
