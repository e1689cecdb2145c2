#pragma once

#include <optional>
#include <vector>

#include "jscc/prob.hpp"

namespace jscc {

struct ArimotoOptions {
  double rel_tol = 1e-10;
  int max_iters = 4000;
};

struct E0Result {
  double value = 0.0;
  std::vector<double> input_dist;
  int iters = 0;
  double residual = 0.0;
  bool converged = true;
};

// Gallager's channel function at a fixed input distribution,
// E0~(rho, P_X, W) = -log2 sum_y ( sum_x P_X(x) W(y|x)^{1/(1+rho)} )^{1+rho}.
double e0_tilde(double rho, const std::vector<double>& p_x, const Channel& w);

// E0(rho, W) = max over the input simplex of e0_tilde, by Arimoto's
// fixed-point iteration. Non-convergence is flagged, never silently dropped.
E0Result e0_max(const Channel& w, double rho, const ArimotoOptions& opt = {});

// Expurgated channel function at a fixed input distribution (rho >= 1),
// Ex~(rho, P_X, W) = -rho log2 sum_{x,x'} P(x)P(x') B(x,x')^{1/rho} with
// B(x,x') = sum_y sqrt(W(y|x) W(y|x')).
double ex_tilde(double rho, const std::vector<double>& p_x, const Channel& w);

struct ExResult {
  double value = 0.0;
  std::vector<double> input_dist;
  bool exact = false;  // true when a uniform input is provably optimal (equidistant W)
};

// Ex(rho, W) = max over P_X. Exact via the uniform input for equidistant
// channels; otherwise simplex grid search plus pairwise ascent, flagged
// approximate.
ExResult ex_max(const Channel& w, double rho, int grid_resolution = 200);

// Pairwise Bhattacharyya sums B(x, x').
std::vector<std::vector<double>> bhattacharyya_matrix(const Channel& w);

// The common pairwise Bhattacharyya sum when the channel is equidistant.
std::optional<double> equidistant_beta(const Channel& w, double rel_tol = 1e-9);

// Closed form Ex(rho, W) for an equidistant channel with parameter beta.
double ex_equidistant(double rho, double beta, std::size_t input_size);
double ex_equidistant_slope(double rho, double beta, std::size_t input_size);

struct CapacityResult {
  double value = 0.0;
  std::vector<double> input_dist;
  int iters = 0;
  bool converged = true;
};

// Channel capacity in bits by the Blahut-Arimoto iteration.
CapacityResult capacity(const Channel& w, double tol = 1e-12, int max_iters = 200000);

// One column block of a Gallager-symmetric channel: the columns of the block
// are permutations of each other, with `column` the shared entry multiset read
// as a distribution over inputs (scaled by whatever the column sums to).
struct SymmetricBlock {
  std::size_t output_count = 0;
  std::vector<double> column;
};

// Closed forms available when the transition matrix partitions into
// permutation-symmetric column blocks. The maximizing input distribution is
// uniform for every rho, so E0(rho, W) is concave and equals its hulls.
class SymmetricProfile {
 public:
  SymmetricProfile(std::size_t input_size, std::vector<SymmetricBlock> blocks);

  double e0(double rho) const;
  double e0_slope(double rho) const;  // dE0/drho in bits
  double capacity() const { return e0_slope(0.0); }
  std::size_t input_size() const { return input_size_; }
  const std::vector<SymmetricBlock>& blocks() const { return blocks_; }
  std::vector<double> tilted_column(std::size_t block, double alpha) const;

 private:
  std::size_t input_size_ = 0;
  std::vector<SymmetricBlock> blocks_;
};

std::optional<SymmetricProfile> symmetric_profile(const Channel& w, double tol = 1e-12);

struct ChannelRates {
  double capacity = 0.0;
  double critical_rate = 0.0;    // R_cr(W)
  double expurgated_rate = 0.0;  // R_ex(W)
  double r_infinity = 0.0;       // R_inf(W)
  bool zero_error_capacity_is_zero = true;
  bool expurgated_rate_approximate = false;
};

struct RatesOptions {
  double rho_step = 1e-3;
  double slope_step = 1e-4;  // finite-difference step at rho = 1
};

ChannelRates channel_rates(const Channel& w, const RatesOptions& opt = {});

// lim_{rho->inf} E0(rho, W)/rho evaluated by doubling rho until the change
// drops below tol. Exposed as the numeric-limit oracle; channel_rates snaps
// the value to zero when some output column has full support.
double r_infinity_numeric(const Channel& w, double tol = 1e-6, double rho_cap = 16384.0);

// true iff some output is reachable from every input, which forces R_inf = 0.
bool has_full_support_column(const Channel& w);

// E_ex(0, W) = lim_{rho->inf} Ex(rho, W); the infinity marker when the
// channel has positive zero-error capacity.
ExtReal expurgated_zero_rate_exponent(const Channel& w, int grid_resolution = 60);

struct ChannelCurvePoint {
  double rate = 0.0;
  double e_r = 0.0;
  ExtReal e_sp;
  std::optional<double> e_ex;
};

struct CurveOptions {
  double rho_step = 1e-3;
  double rho_max = 8.0;
  bool with_expurgated = false;
};

std::vector<ChannelCurvePoint> exponent_curves(const Channel& w, const std::vector<double>& r_grid,
                                               const CurveOptions& opt = {});

}  // namespace jscc
