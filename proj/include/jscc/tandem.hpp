#pragma once

#include <optional>
#include <string>

#include "jscc/jscc_bounds.hpp"

namespace jscc {

// Tandem (separate) coding exponent and its comparison against the joint
// exponent: E_T = sup_R min{ t e(R/t, Q), E(R, W) }. The true channel
// exponent E is only known at rates >= R_cr, so E_T is exact when the curves
// meet there and a bracket otherwise.
struct TandemReport {
  std::optional<double> et_value;  // exact E_T when determined
  double et_lower = 0.0;
  double et_upper = 0.0;  // min over the applicable upper-bound rules

  double r_o = 0.0;  // intersection rate (sphere-packing resolution), or t log|S|
  bool r_o_from_intersection = false;
  double r_s = 0.0;  // intersection of E_sp with the source curve, or t log|S|
  bool r_s_from_intersection = false;
  std::optional<double> gamma;     // tilt with t H(Q^{(gamma)}) = R_cr; absent if R_cr > t log|S|
  bool gamma_infinite = false;     // R_cr = t log|S| edge
  double t_d_gamma = 0.0;          // t D(Q^{(gamma)} || Q) when gamma is defined

  // joint exponent summary
  std::optional<double> ej_value;  // exact E_J when determined
  double ej_lower = 0.0;
  ExtReal ej_upper;

  // sufficiency predicates for E_J > E_T
  bool either_exact_condition = false;  // max{tR_cr_s, E0(1)-tD_gamma} >= R_cr
  std::optional<char> condition_case;   // 'a' / 'b' / 'c'
  std::optional<double> case_gap_lower; // the per-case lower bound on E_J - E_T
  bool straight_line_condition = false; // E0(1)-tEs(1) >= E_Rl
  std::optional<std::string> straight_line_skipped;
  bool tilted_condition = false;        // E0(1)-tEs(1) >= tD(Q^{(gamma)} || Q)
  bool beats_tandem = false;

  std::optional<double> k1, k2, e_r_l;  // straight-line predicate payload

  // doubling law
  bool doubling_equality_condition = false;
  std::optional<bool> doubling_holds;  // set when both exponents are exact

  // ratio E_J / E_T
  std::optional<double> ratio;  // absent when tH(Q) >= C ("N/A")
  bool ratio_is_lower_bound = false;

  bool source_uniform = false;
  bool zero_exponents = false;  // tH(Q) >= C
};

TandemReport tandem_report(JsccSolver& solver);
TandemReport tandem_report(const JsccProblem& p, const SolverOptions& opt = {});

}  // namespace jscc
