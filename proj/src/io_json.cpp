#include "jscc/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jscc {

namespace {

using nlohmann::json;

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

json num(double v) { return json(round12(v)); }

json ext(const ExtReal& v) {
  if (v.is_infinite()) return json("inf");
  return num(v.value());
}

json opt_num(const std::optional<double>& v) {
  if (!v) return json(nullptr);
  return num(*v);
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) {
    throw std::invalid_argument(where + ": expected a decimal number");
  }
  return j.get<double>();
}

const char* tightness_name(Tightness t) {
  switch (t) {
    case Tightness::ZeroExponent:
      return "ZeroExponent";
    case Tightness::Exact:
      return "Exact";
    case Tightness::Bracketed:
      return "Bracketed";
  }
  return "?";
}

const char* assumption_name(ExAssumption a) {
  switch (a) {
    case ExAssumption::NotApplicable:
      return "not-applicable";
    case ExAssumption::VerifiedEquidistant:
      return "verified-equidistant";
    case ExAssumption::Assumed:
      return "assumed";
  }
  return "?";
}

}  // namespace

JsccProblem parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.contains("source") || !doc["source"].contains("probs") ||
      !doc["source"]["probs"].is_array()) {
    throw std::invalid_argument("source.probs: missing or not an array");
  }
  std::vector<double> probs;
  const json& jp = doc["source"]["probs"];
  for (std::size_t i = 0; i < jp.size(); ++i) {
    probs.push_back(number_at(jp[i], "source.probs[" + std::to_string(i) + "]"));
  }
  if (!doc.contains("channel") || !doc["channel"].contains("matrix") ||
      !doc["channel"]["matrix"].is_array()) {
    throw std::invalid_argument("channel.matrix: missing or not an array");
  }
  std::vector<std::vector<double>> rows;
  const json& jm = doc["channel"]["matrix"];
  for (std::size_t x = 0; x < jm.size(); ++x) {
    if (!jm[x].is_array()) {
      throw std::invalid_argument("channel.matrix[" + std::to_string(x) + "]: expected an array");
    }
    std::vector<double> row;
    for (std::size_t y = 0; y < jm[x].size(); ++y) {
      row.push_back(number_at(
          jm[x][y], "channel.matrix[" + std::to_string(x) + "][" + std::to_string(y) + "]"));
    }
    rows.push_back(std::move(row));
  }
  if (!doc.contains("t")) throw std::invalid_argument("t: missing transmission rate");
  const double t = number_at(doc["t"], "t");
  return JsccProblem(Source(std::move(probs)), Channel::from_rows(rows), t);
}

JsccProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_json(buf.str());
}

std::string bound_report_json(const BoundReport& rep) {
  json j;
  j["tightness"] = tightness_name(rep.tightness);
  j["exact_value"] = opt_num(rep.exact_value);
  j["lower_rc"] = num(rep.lower_rc);
  j["upper_sp"] = ext(rep.upper_sp);
  j["lower_gallager"] = num(rep.lower_gallager);
  j["lower_ex"] = opt_num(rep.lower_ex);
  j["rho_under_star"] = num(rep.rho_under_star);
  j["rho_bar_star"] = num(rep.rho_bar_star);
  j["rho_under_x"] = opt_num(rep.rho_under_x);
  j["r_under_m"] = num(rep.r_under_m);
  j["r_bar_m"] = num(rep.r_bar_m);
  j["r_under_xm"] = opt_num(rep.r_under_xm);
  j["expurgated_applicable"] = rep.expurgated_applicable;
  j["expurgated_improves"] = rep.expurgated_improves;
  j["expurgated_assumption"] = assumption_name(rep.ex_assumption);
  j["rho_capped"] = rep.rho_capped;
  j["capacity"] = num(rep.capacity);
  j["critical_rate"] = num(rep.critical_rate);
  j["expurgated_rate"] = num(rep.expurgated_rate);
  j["r_infinity"] = num(rep.r_infinity);
  j["zero_error_capacity_is_zero"] = rep.zero_error_capacity_is_zero;
  j["t_entropy"] = num(rep.t_entropy);
  j["t_log_alphabet"] = num(rep.t_log_alphabet);
  j["t_source_critical_rate"] = num(rep.t_source_critical_rate);
  return j.dump(2) + "\n";
}

std::string tandem_report_json(const TandemReport& rep) {
  json j;
  j["et_value"] = opt_num(rep.et_value);
  j["et_lower"] = num(rep.et_lower);
  j["et_upper"] = std::isinf(rep.et_upper) ? json("inf") : num(rep.et_upper);
  j["r_o"] = num(rep.r_o);
  j["r_o_from_intersection"] = rep.r_o_from_intersection;
  j["r_s"] = num(rep.r_s);
  j["r_s_from_intersection"] = rep.r_s_from_intersection;
  j["gamma"] = rep.gamma_infinite ? json("inf") : opt_num(rep.gamma);
  j["t_d_gamma"] = num(rep.t_d_gamma);
  j["ej_value"] = opt_num(rep.ej_value);
  j["ej_lower"] = num(rep.ej_lower);
  j["ej_upper"] = ext(rep.ej_upper);
  j["either_exact_condition"] = rep.either_exact_condition;
  j["condition_case"] =
      rep.condition_case ? json(std::string(1, *rep.condition_case)) : json(nullptr);
  j["case_gap_lower"] = opt_num(rep.case_gap_lower);
  j["straight_line_condition"] = rep.straight_line_condition;
  j["straight_line_skipped"] =
      rep.straight_line_skipped ? json(*rep.straight_line_skipped) : json(nullptr);
  j["tilted_condition"] = rep.tilted_condition;
  j["beats_tandem"] = rep.beats_tandem;
  j["k1"] = opt_num(rep.k1);
  j["k2"] = opt_num(rep.k2);
  j["e_r_l"] = opt_num(rep.e_r_l);
  j["doubling_equality_condition"] = rep.doubling_equality_condition;
  j["doubling_holds"] = rep.doubling_holds ? json(*rep.doubling_holds) : json(nullptr);
  j["ratio"] = opt_num(rep.ratio);
  j["ratio_is_lower_bound"] = rep.ratio_is_lower_bound;
  j["source_uniform"] = rep.source_uniform;
  j["zero_exponents"] = rep.zero_exponents;
  return j.dump(2) + "\n";
}

std::string lossy_report_json(const LossyReport& rep) {
  json j;
  j["tightness"] = tightness_name(rep.tightness);
  j["exactness_by_analogy"] = rep.exactness_by_analogy;
  j["exact_value"] = opt_num(rep.exact_value);
  j["lower"] = num(rep.lower);
  j["upper"] = ext(rep.upper);
  j["lower_branch"] = rep.lower_branch == LossyLowerBranch::Hull ? "hull" : "zero-rate-limit";
  j["rho_zero"] = num(rep.rho_zero);
  j["rho_bar"] = num(rep.rho_bar);
  j["rho_under"] = num(rep.rho_under);
  j["r_bar_m"] = num(rep.r_bar_m);
  j["r_under_m"] = num(rep.r_under_m);
  j["rho_capped"] = rep.rho_capped;
  j["t_rate_distortion"] = num(rep.t_rate_distortion);
  j["capacity"] = num(rep.capacity);
  j["r_infinity"] = num(rep.r_infinity);
  return j.dump(2) + "\n";
}

std::string channel_json(const Channel& w) {
  json rows = json::array();
  for (std::size_t x = 0; x < w.input_size; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < w.output_size; ++y) row.push_back(w.at(x, y));
    rows.push_back(std::move(row));
  }
  json j;
  j["channel"] = json{{"matrix", rows}};
  return j.dump(2) + "\n";
}

}  // namespace jscc
