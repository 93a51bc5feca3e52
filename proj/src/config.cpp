#include "gnm/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gnm/errors.hpp"

namespace gnm {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw InputError("bad value for " + key + ": '" + text + "'");
  return value;
}

// Also accepts scientific notation such as 1e6 for integer keys.
std::int64_t parse_count(const std::string& key, const std::string& text) {
  if (text.find_first_of("eE.") == std::string::npos) return parse_number<std::int64_t>(key, text);
  const double d = parse_number<double>(key, text);
  if (d != static_cast<double>(static_cast<std::int64_t>(d))) throw InputError("value for " + key + " is not an integer");
  return static_cast<std::int64_t>(d);
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw InputError("config line " + std::to_string(lineno) + " has no '='");
    const std::string key = trim(body.substr(0, eq));
    if (key.empty()) throw InputError("config line " + std::to_string(lineno) + " has an empty key");
    if (!kv.emplace(key, trim(body.substr(eq + 1))).second) throw InputError("config key repeated: " + key);
  }
  return kv;
}

KeyValues read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  return parse_key_values(in);
}

void apply_key_values(ExperimentConfig& cfg, const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "kind") cfg.kind = value;
    else if (key == "n") cfg.n = parse_count(key, value);
    else if (key == "m") cfg.m = parse_count(key, value);
    else if (key == "p") cfg.p = parse_number<double>(key, value);
    else if (key == "eps") cfg.eps = parse_number<double>(key, value);
    else if (key == "trials") cfg.trials = parse_count(key, value);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "budget") cfg.budget = static_cast<std::uint64_t>(parse_count(key, value));
    else if (key == "k") cfg.k = parse_count(key, value);
    else if (key == "r") cfg.r = parse_count(key, value);
    else if (key == "threads") cfg.threads = static_cast<int>(parse_count(key, value));
    else if (key == "out") cfg.out = value;
    else if (key == "csv") cfg.csv = value;
    else throw InputError("unknown config key: " + key);
  }
}

ExperimentConfig resolve_config(ExperimentConfig defaults, const std::string& file, const KeyValues& flags) {
  if (!file.empty()) apply_key_values(defaults, read_key_value_file(file));
  apply_key_values(defaults, flags);
  return defaults;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n < 1) throw InputError("n must be set to a positive value");
  if (cfg.trials < 1) throw InputError("trials must be at least 1");
  if (cfg.eps < 0) throw InputError("eps must be nonnegative");
  if (cfg.threads < 0) throw InputError("threads must be nonnegative");
  const bool needs_m = cfg.kind == "concentration" || cfg.kind == "xkr" || cfg.kind == "predict";
  if (needs_m && (!cfg.m || cfg.p)) throw InputError(cfg.kind + " needs m and no p");
  if (cfg.m && cfg.p) throw InputError("set only one of m and p");
  if (cfg.m && (*cfg.m < 0 || *cfg.m > cfg.n * (cfg.n - 1) / 2)) throw InputError("m must lie in [0, C(n,2)]");
  if (cfg.p && !(*cfg.p >= 0 && *cfg.p <= 1)) throw InputError("p must lie in [0, 1]");
  if (cfg.kind == "xkr") {
    if (cfg.k < 0 || cfg.r < 0) throw InputError("xkr needs k and r");
    if (cfg.r > cfg.k) throw InputError("r must not exceed k");
    if (cfg.k + cfg.r > cfg.n) throw InputError("k + r must not exceed n");
  }
}

std::string to_key_values(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out.precision(17);
  out << "kind = " << cfg.kind << '\n' << "n = " << cfg.n << '\n';
  if (cfg.m) out << "m = " << *cfg.m << '\n';
  if (cfg.p) out << "p = " << *cfg.p << '\n';
  out << "eps = " << cfg.eps << '\n'
      << "trials = " << cfg.trials << '\n'
      << "seed = " << cfg.seed << '\n'
      << "budget = " << cfg.budget << '\n'
      << "k = " << cfg.k << '\n'
      << "r = " << cfg.r << '\n'
      << "threads = " << cfg.threads << '\n';
  if (!cfg.out.empty()) out << "out = " << cfg.out << '\n';
  if (!cfg.csv.empty()) out << "csv = " << cfg.csv << '\n';
  return out.str();
}

}  // namespace gnm
