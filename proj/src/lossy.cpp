#include "jscc/lossy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jscc/opt.hpp"
#include "jscc/source_exponent.hpp"

namespace jscc {

namespace {

Source binary_source(double q) { return Source({q, 1.0 - q}); }

}  // namespace

LossyProblem::LossyProblem(double q_param, Channel w, double t_rate, double delta_threshold)
    : q(q_param), channel(std::move(w)), t(t_rate), delta(delta_threshold) {
  if (!(q > 0.0 && q <= 0.5)) throw std::invalid_argument("lossy source parameter q must be in (0, 1/2]");
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw std::invalid_argument("distortion threshold delta must be in [0, 1/2]");
  }
  if (!(t > 0.0)) throw std::invalid_argument("transmission rate t must be positive");
}

double rate_distortion_binary(double q, double delta) {
  if (!(q > 0.0 && q <= 0.5)) throw std::invalid_argument("rate_distortion_binary: q outside (0, 1/2]");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("rate_distortion_binary: delta outside [0, 1]");
  }
  if (delta > q) return 0.0;
  return binary_entropy(q) - binary_entropy(delta);
}

double es_delta(double q, double delta, double rho) {
  return source_function(binary_source(q), rho) - rho * binary_entropy(delta);
}

double rho_zero(double q, double delta) {
  if (q >= delta) return 0.0;
  // delta = 1/2 pins the target entropy at log|S| = 1; back off so the root
  // stays finite instead of returning the symbolic infinity
  const double target = std::min(binary_entropy(delta), 1.0 - 1e-9);
  const ExtReal root = tilted_entropy_root(binary_source(q), target);
  return root.value();
}

ExtReal lossy_source_exponent(double q, double delta, double rate_bits) {
  const double hb_delta = binary_entropy(delta);
  if (rate_bits > 1.0 - hb_delta + 1e-12) return ExtReal::infinity();
  if (rate_bits <= rate_distortion_binary(q, delta)) return ExtReal::of(0.0);
  // F(R, Q, delta) = e(R + h_b(delta), Q) on the middle branch
  return source_error_exponent(binary_source(q), rate_bits + hb_delta);
}

LossyReport lossy_bounds(const LossyProblem& p, const SolverOptions& opt) {
  LossyReport rep;
  const Source src = binary_source(p.q);
  JsccSolver solver(JsccProblem(src, p.channel, p.t), opt);

  const double hb_delta = binary_entropy(p.delta);
  rep.t_rate_distortion = p.t * rate_distortion_binary(p.q, p.delta);
  rep.capacity = solver.capacity();
  rep.r_infinity = solver.rates().r_infinity;
  rep.rho_zero = rho_zero(p.q, p.delta);

  if (rep.t_rate_distortion >= rep.capacity) {
    rep.tightness = Tightness::ZeroExponent;
    rep.exact_value = 0.0;
    rep.upper = ExtReal::of(0.0);
    return rep;
  }

  // upper bound: sup over rho >= rho_zero of T_sp - t(E_s - rho h_b(delta))
  const double shifted_top = p.t * (1.0 - hb_delta);
  if (rep.r_infinity > shifted_top) {
    rep.upper = ExtReal::infinity();
  } else {
    const SpBound sp = solver.sphere_packing_shifted(rep.rho_zero, hb_delta);
    rep.upper = sp.value;
    rep.rho_bar = sp.rho;
    rep.rho_capped = sp.capped;
    rep.r_bar_m = p.t * (tilted_entropy(src, sp.rho) - hb_delta);
  }

  // lower bound
  const double branch_threshold = std::sqrt(p.q) / (std::sqrt(p.q) + std::sqrt(1.0 - p.q));
  if (p.delta < branch_threshold) {
    rep.lower_branch = LossyLowerBranch::Hull;
    const DualBound rc = solver.random_coding_shifted(rep.rho_zero, hb_delta);
    rep.lower = rc.value;
    rep.rho_under = rc.rho;
    rep.r_under_m = p.t * (tilted_entropy(src, rc.rho) - hb_delta);
  } else {
    rep.lower_branch = LossyLowerBranch::ZeroRateLimit;
    rep.lower = p.t * binary_divergence(p.delta, p.q) + solver.e0_at_one();
    rep.rho_under = 1.0;
    rep.r_under_m = 0.0;  // the minimizing rate collapses to 0+
  }

  if (rep.upper.is_finite()) {
    const bool exact = rep.lower_branch == LossyLowerBranch::Hull &&
                       rep.rho_bar <= 1.0 + opt.rate_tol;
    if (exact) {
      rep.tightness = Tightness::Exact;
      rep.exact_value = rep.upper.value();
    }
  }
  return rep;
}

}  // namespace jscc
