#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace gnm {

// Settings for one harness run. Sources are layered: built-in defaults, then a
// key=value file, then command-line flags.
struct ExperimentConfig {
  std::string kind;  // concentration, xkr, predict, ...
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  std::optional<double> p;
  double eps = 0.1;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000'000;
  std::int64_t k = -1;
  std::int64_t r = -1;
  int threads = 0;  // 0: one per hardware thread
  std::string out;
  std::string csv;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

using KeyValues = std::map<std::string, std::string>;

// One "key = value" per line; blank lines and lines starting with '#' are
// skipped. Throws InputError on a line without '=' or a repeated key.
KeyValues parse_key_values(std::istream& in);
KeyValues read_key_value_file(const std::string& path);

// Overwrites the fields named in kv. Throws InputError on unknown keys or
// unparsable values.
void apply_key_values(ExperimentConfig& cfg, const KeyValues& kv);

// defaults < file (when non-empty) < flags.
ExperimentConfig resolve_config(ExperimentConfig defaults, const std::string& file, const KeyValues& flags);

// Checks what the given kind needs: n, exactly one of m or p where required,
// trials >= 1, and k, r for xkr.
void validate(const ExperimentConfig& cfg);

// The config as key=value lines in a fixed key order; parses back to an equal
// config.
std::string to_key_values(const ExperimentConfig& cfg);

}  // namespace gnm
