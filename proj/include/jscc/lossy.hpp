#pragma once

#include <optional>

#include "jscc/jscc_bounds.hpp"

namespace jscc {

// Lossy joint source-channel coding under the Hamming distortion measure:
// binary source {q, 1-q} (q <= 1/2, uniform allowed), arbitrary DMC, and
// excess-distortion threshold delta in [0, 1/2].
struct LossyProblem {
  double q = 0.5;
  Channel channel;
  double t = 1.0;
  double delta = 0.0;

  LossyProblem(double q_param, Channel w, double t_rate, double delta_threshold);
};

// Binary rate-distortion function: h_b(q) - h_b(delta) for delta <= q, else 0.
double rate_distortion_binary(double q, double delta);

// Distortion-shifted source function E_s(rho, Q) - rho h_b(delta).
double es_delta(double q, double delta, double rho);

// Left end of the tilt range: 0 when q >= delta, else the root of
// H(Q^{(rho)}) = h_b(delta).
double rho_zero(double q, double delta);

// Source error exponent with a fidelity criterion F(R, Q, delta): zero up to
// the rate-distortion function, the shifted conjugate in the middle, and the
// infinity marker beyond 1 - h_b(delta).
ExtReal lossy_source_exponent(double q, double delta, double rate_bits);

enum class LossyLowerBranch { Hull, ZeroRateLimit };

struct LossyReport {
  double lower = 0.0;
  ExtReal upper;
  Tightness tightness = Tightness::Bracketed;
  std::optional<double> exact_value;
  bool exactness_by_analogy = true;  // the exactness test mirrors the lossless one
  LossyLowerBranch lower_branch = LossyLowerBranch::Hull;

  double rho_zero = 0.0;
  double rho_bar = 0.0;
  double rho_under = 0.0;
  double r_bar_m = 0.0;    // t (H(Q^{(rho_bar)}) - h_b(delta))
  double r_under_m = 0.0;
  bool rho_capped = false;

  double t_rate_distortion = 0.0;  // t R(Q, delta)
  double capacity = 0.0;
  double r_infinity = 0.0;
};

LossyReport lossy_bounds(const LossyProblem& p, const SolverOptions& opt = {});

}  // namespace jscc
