#pragma once

#include <cstddef>
#include <vector>

#include "jscc/channel_exponent.hpp"
#include "jscc/parallel.hpp"
#include "jscc/prob.hpp"

namespace jscc {

struct EnvelopePoint {
  double x = 0.0;
  double y = 0.0;
};

// Least concave majorant of a sampled function: piecewise linear through a
// subset of the samples (the knots), with nonincreasing segment slopes.
class ConcaveEnvelope {
 public:
  explicit ConcaveEnvelope(std::vector<EnvelopePoint> knots);

  double eval(double x) const;  // linear interpolation; throws outside the domain
  double right_slope_at(double x) const;
  double domain_lo() const { return knots_.front().x; }
  double domain_hi() const { return knots_.back().x; }
  const std::vector<EnvelopePoint>& knots() const { return knots_; }

  // max over knots of (y_k - x_k * r); exact conjugation of the hull.
  double conjugate_max(double r) const;
  std::size_t conjugate_argmax(double r) const;
  // Same for a nondecreasing grid of r values, in one two-pointer pass.
  std::vector<double> conjugate_many(const std::vector<double>& r_sorted) const;

 private:
  std::vector<EnvelopePoint> knots_;
};

// Upper hull of samples with strictly increasing x (monotone chain).
ConcaveEnvelope upper_concave_envelope(const std::vector<EnvelopePoint>& samples);

// E0(rho, W) sampled on a rho grid. The parallel policy computes grid points
// independently (cold-started Arimoto per point) and matches the serial
// policy exactly.
struct E0Grid {
  std::vector<double> rho;
  std::vector<double> e0;
  bool all_converged = true;
};

E0Grid sample_e0(const Channel& w, const std::vector<double>& rho_grid,
                 ExecPolicy policy = ExecPolicy::Parallel, const ArimotoOptions& opt = {});

// Grid builders: uniform `step` on [0,1]; beyond 1 a coarser uniform step up
// to 8, then multiplicative spacing. Both grids contain 1.0 exactly, and an
// optional refinement band around rho = 1 supports slope reads there.
std::vector<double> tr_rho_grid(double step = 1e-3);
std::vector<double> tsp_rho_grid(double rho_max, double step = 1e-3, double coarse_step = 1e-2,
                                 bool refine_near_one = false);

// Concave hull of E0(., W) on [0, 1].
ConcaveEnvelope t_r(const Channel& w, double step = 1e-3, ExecPolicy policy = ExecPolicy::Parallel);

// Concave hull of E0(., W) on [0, rho_max] (stand-in for the [0, inf) hull;
// callers extend rho_max until their objective's maximizer is bracketed).
ConcaveEnvelope t_sp(const Channel& w, double rho_max = 8.0, double step = 1e-3,
                     ExecPolicy policy = ExecPolicy::Parallel, bool refine_near_one = false);

}  // namespace jscc
