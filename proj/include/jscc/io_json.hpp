#pragma once

#include <string>

#include "jscc/jscc_bounds.hpp"
#include "jscc/lossy.hpp"
#include "jscc/tandem.hpp"

namespace jscc {

// Parses {"source": {"probs": [...]}, "channel": {"matrix": [[...], ...]},
// "t": number}. Probabilities must be JSON numbers; errors name the offending
// field, row, and entry.
JsccProblem parse_problem_json(const std::string& text);
JsccProblem load_problem(const std::string& path);

// Reports serialize with numbers rounded to 12 significant digits; the
// unbounded marker serializes as the string "inf".
std::string bound_report_json(const BoundReport& rep);
std::string tandem_report_json(const TandemReport& rep);
std::string lossy_report_json(const LossyReport& rep);
std::string channel_json(const Channel& w);

}  // namespace jscc
