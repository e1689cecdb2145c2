#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "jscc/channel_exponent.hpp"
#include "jscc/envelope.hpp"
#include "jscc/prob.hpp"
#include "jscc/source_exponent.hpp"

namespace jscc {

// A source-channel pair with transmission rate t (source symbols per channel
// use). The lossless bound operations additionally require a nonuniform
// source; tandem comparison accepts uniform sources.
struct JsccProblem {
  Source source;
  Channel channel;
  double t = 1.0;

  JsccProblem(Source s, Channel w, double t_rate);
};

enum class Tightness { ZeroExponent, Exact, Bracketed };
enum class ExAssumption { NotApplicable, VerifiedEquidistant, Assumed };

struct BoundReport {
  double lower_rc = 0.0;       // source-channel random-coding lower bound
  ExtReal upper_sp;            // source-channel sphere-packing upper bound
  double lower_gallager = 0.0; // max over [0,1] of E0 - tEs on the raw samples
  std::optional<double> lower_ex;

  double rho_under_star = 0.0;
  double r_under_m = 0.0;
  double rho_bar_star = 0.0;  // meaningful when upper_sp is finite
  double r_bar_m = 0.0;
  std::optional<double> rho_under_x;
  std::optional<double> r_under_xm;

  Tightness tightness = Tightness::Bracketed;
  std::optional<double> exact_value;

  bool expurgated_applicable = false;
  bool expurgated_improves = false;
  ExAssumption ex_assumption = ExAssumption::NotApplicable;
  bool rho_capped = false;

  // channel / source context
  double capacity = 0.0;
  double critical_rate = 0.0;
  double expurgated_rate = 0.0;
  double r_infinity = 0.0;
  bool zero_error_capacity_is_zero = false;
  double t_entropy = 0.0;              // t H(Q)
  double t_log_alphabet = 0.0;         // t log|S|
  double t_source_critical_rate = 0.0; // t H(Q^{(1)})
};

struct SolverOptions {
  double rho_step = 1e-3;    // E0 sampling step on [0,1]
  double coarse_step = 1e-2; // E0 sampling step beyond 1
  double rho_max = 8.0;      // initial T_sp range; doubled until the maximizer is bracketed
  double rho_cap = 1024.0;
  double golden_xtol = 1e-10;
  double rate_tol = 1e-6;      // tolerance for the exactness rate comparisons
  double primal_r_step = 1e-4; // primal oracle grid step, scaled by t
  ArimotoOptions arimoto;
  ExecPolicy policy = ExecPolicy::Parallel;
};

struct DualBound {
  double value = 0.0;
  double rho = 0.0;
  double rate = 0.0;  // t H(Q^{(rho)})
};

struct SpBound {
  ExtReal value;
  double rho = 0.0;
  double rate = 0.0;
  bool capped = false;
};

struct ExpurgatedBound {
  double value = 0.0;
  double rho = 0.0;
  double rate = 0.0;
  ExAssumption assumption = ExAssumption::VerifiedEquidistant;
};

struct PrimalResult {
  double value = 0.0;
  double rate = 0.0;
};

enum class PrimalKind { RandomCoding, SpherePacking, Expurgated };

struct SymmetricExactResult {
  bool symmetric = false;
  bool co1 = false;  // capacity condition (tH(Q) < C in closed form)
  bool co2 = false;  // root of the stationarity equation lies in [0,1]
  std::optional<double> value;
  std::optional<double> rho;
};

// Shared machinery for one (Q, W, t) triple: symmetric closed forms when the
// channel allows them, concave hulls of sampled E0 otherwise, channel rate
// landmarks, the dual bounds and their optimizers, and the primal grid oracle.
class JsccSolver {
 public:
  explicit JsccSolver(JsccProblem p, SolverOptions opt = {});

  const JsccProblem& problem() const { return p_; }
  const SolverOptions& options() const { return opt_; }
  const std::optional<SymmetricProfile>& profile() const { return profile_; }
  const ChannelRates& rates();

  double capacity();
  double critical_rate();
  double expurgated_rate();
  double r_infinity();
  double t_entropy() const { return t_entropy_; }
  double t_log_alphabet() const { return t_log_alphabet_; }
  double t_source_critical_rate() const { return t_source_crit_; }
  bool zero_exponent() { return t_entropy_ >= capacity(); }

  double e0_at_one();
  double t_es(double rho) const;          // t E_s(rho, Q)
  double t_source_exponent(double rate);  // t e(rate / t, Q), finite branch or huge
  ExtReal t_source_exponent_ext(double rate);

  DualBound random_coding();
  SpBound sphere_packing();
  double gallager();
  std::optional<ExpurgatedBound> expurgated();
  BoundReport classify();
  PrimalResult primal_oracle(PrimalKind kind);
  SymmetricExactResult symmetric_exact();

  // channel exponent curves at rate R bits/channel use
  double e_r_at(double rate);
  ExtReal e_sp_at(double rate);
  std::optional<double> e_ex_at(double rate);

  // generic sphere-packing style dual: sup over [rho_lo, inf) of
  // T(rho) - t*(E_s(rho) - rho*shift); shift = 0 gives the plain bound.
  SpBound sphere_packing_shifted(double rho_lo, double shift);
  DualBound random_coding_shifted(double rho_lo, double shift);

 private:
  const ConcaveEnvelope& tr_hull();
  const ConcaveEnvelope& tsp_hull_for(double rho_lo, double shift);
  double dual_objective(double rho, double shift) const;

  JsccProblem p_;
  SolverOptions opt_;
  std::optional<SymmetricProfile> profile_;
  std::optional<ChannelRates> rates_;
  std::optional<double> capacity_, critical_rate_, r_infinity_;
  std::optional<double> expurgated_rate_;
  bool expurgated_rate_approx_ = false;
  std::optional<double> e0_one_;
  std::optional<ConcaveEnvelope> tr_;
  std::optional<E0Grid> tr_samples_;
  std::optional<ConcaveEnvelope> tsp_;
  double tsp_rho_max_ = 0.0;
  bool tsp_capped_ = false;
  std::optional<double> equi_beta_;
  bool equi_checked_ = false;
  double t_entropy_ = 0.0, t_log_alphabet_ = 0.0, t_source_crit_ = 0.0;
};

// One-shot wrappers matching the solver methods.
DualBound random_coding_bound(const JsccProblem& p, const SolverOptions& opt = {});
SpBound sphere_packing_bound(const JsccProblem& p, const SolverOptions& opt = {});
double gallager_bound(const JsccProblem& p, const SolverOptions& opt = {});
std::optional<ExpurgatedBound> expurgated_bound(const JsccProblem& p, const SolverOptions& opt = {});
BoundReport classify(const JsccProblem& p, const SolverOptions& opt = {});

}  // namespace jscc
