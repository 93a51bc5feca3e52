#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gnm/alpha.hpp"
#include "gnm/experiments.hpp"
#include "gnm/extended.hpp"
#include "gnm/prediction.hpp"
#include "gnm/pw_enum.hpp"
#include "gnm/verify.hpp"
#include "json.hpp"

namespace gnm {

using Json = nlohmann::ordered_json;

// JSON views with a fixed key order.
Json to_json(const PredictionReport& rep);
Json to_json(const EnumResult& res);
Json to_json(const AlphaResult& res);
Json to_json(const VariableCounts& counts);
Json to_json(const ConcentrationSummary& s);
Json to_json(const XkrReport& rep);
Json to_json(const CheckResult& check);
Json to_json(const SuiteReport& rep);

ConcentrationSummary concentration_from_json(const Json& j);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

// Per-trial CSV: header "trial,seed,stream,alpha,nodes,status", LF endings.
void write_trials_csv(std::ostream& out, const std::vector<TrialRow>& rows);
std::string trials_csv(const std::vector<TrialRow>& rows);
std::vector<TrialRow> read_trials_csv(std::istream& in);

// Writes text to path, replacing any existing file. Throws InputError when
// the file cannot be opened.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gnm
