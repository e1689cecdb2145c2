#include "jscc/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace jscc {

ConcaveEnvelope::ConcaveEnvelope(std::vector<EnvelopePoint> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw std::invalid_argument("envelope needs at least two knots");
}

double ConcaveEnvelope::eval(double x) const {
  const double lo = domain_lo(), hi = domain_hi();
  if (x < lo - 1e-12 || x > hi + 1e-12) {
    throw std::invalid_argument("envelope evaluated outside its domain");
  }
  x = std::clamp(x, lo, hi);
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                             [](double v, const EnvelopePoint& p) { return v < p.x; });
  if (it == knots_.begin()) ++it;
  if (it == knots_.end()) --it;
  const EnvelopePoint& b = *it;
  const EnvelopePoint& a = *(it - 1);
  const double s = (b.y - a.y) / (b.x - a.x);
  return a.y + s * (x - a.x);
}

double ConcaveEnvelope::right_slope_at(double x) const {
  const double h = std::min(1e-4, 0.5 * (domain_hi() - x));
  if (!(h > 0.0)) throw std::invalid_argument("right_slope_at: no room to the right");
  return (eval(x + h) - eval(x)) / h;
}

double ConcaveEnvelope::conjugate_max(double r) const {
  const std::size_t k = conjugate_argmax(r);
  return knots_[k].y - knots_[k].x * r;
}

std::size_t ConcaveEnvelope::conjugate_argmax(double r) const {
  // knots have nonincreasing slopes, so y_k - x_k r is unimodal in k
  std::size_t lo = 0, hi = knots_.size() - 1;
  auto val = [&](std::size_t k) { return knots_[k].y - knots_[k].x * r; };
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (val(mid) < val(mid + 1)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return val(lo) >= val(hi) ? lo : hi;
}

std::vector<double> ConcaveEnvelope::conjugate_many(const std::vector<double>& r_sorted) const {
  std::vector<double> out(r_sorted.size());
  std::size_t k = knots_.size() - 1;  // optimal knot index is nonincreasing in r
  auto val = [&](std::size_t idx, double r) { return knots_[idx].y - knots_[idx].x * r; };
  for (std::size_t i = r_sorted.size(); i-- > 0;) {
    const double r = r_sorted[i];
    while (k + 1 < knots_.size() && val(k + 1, r) >= val(k, r)) ++k;
    while (k > 0 && val(k - 1, r) >= val(k, r)) --k;
    out[i] = val(k, r);
  }
  return out;
}

ConcaveEnvelope upper_concave_envelope(const std::vector<EnvelopePoint>& samples) {
  if (samples.size() < 2) throw std::invalid_argument("upper_concave_envelope: need >= 2 samples");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].x > samples[i - 1].x)) {
      throw std::invalid_argument("upper_concave_envelope: sample x values must strictly increase");
    }
  }
  std::vector<EnvelopePoint> hull;
  hull.reserve(samples.size());
  for (const EnvelopePoint& c : samples) {
    while (hull.size() >= 2) {
      const EnvelopePoint& a = hull[hull.size() - 2];
      const EnvelopePoint& b = hull[hull.size() - 1];
      // drop b when it lies on or below chord a->c
      if ((b.y - a.y) * (c.x - a.x) <= (c.y - a.y) * (b.x - a.x)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(c);
  }
  return ConcaveEnvelope(std::move(hull));
}

E0Grid sample_e0(const Channel& w, const std::vector<double>& rho_grid, ExecPolicy policy,
                 const ArimotoOptions& opt) {
  E0Grid grid;
  grid.rho = rho_grid;
  grid.e0.assign(rho_grid.size(), 0.0);
  std::vector<char> ok(rho_grid.size(), 1);
  parallel_for(rho_grid.size(), policy, [&](std::size_t i) {
    const E0Result r = e0_max(w, rho_grid[i], opt);
    grid.e0[i] = r.value;
    ok[i] = r.converged ? 1 : 0;
  });
  for (char c : ok) {
    if (!c) grid.all_converged = false;
  }
  return grid;
}

std::vector<double> tr_rho_grid(double step) {
  const int n = std::max(2, static_cast<int>(std::lround(1.0 / step)));
  std::vector<double> g;
  g.reserve(n + 1);
  for (int i = 0; i < n; ++i) g.push_back(static_cast<double>(i) / n);
  g.push_back(1.0);
  return g;
}

std::vector<double> tsp_rho_grid(double rho_max, double step, double coarse_step,
                                 bool refine_near_one) {
  if (!(rho_max > 1.0)) throw std::invalid_argument("tsp_rho_grid: rho_max must exceed 1");
  std::set<double> pts;
  for (double v : tr_rho_grid(step)) pts.insert(v);
  const double mid = std::min(rho_max, 8.0);
  const int nm = static_cast<int>(std::ceil((mid - 1.0) / coarse_step));
  for (int i = 1; i <= nm; ++i) pts.insert(std::min(1.0 + coarse_step * i, mid));
  if (rho_max > 8.0) {
    double v = 8.0;
    while (v < rho_max) {
      v *= 1.0 + coarse_step;
      pts.insert(std::min(v, rho_max));
    }
  }
  pts.insert(rho_max);
  if (refine_near_one) {
    for (int i = -1000; i <= 1000; ++i) {
      const double v = 1.0 + i * 1e-4;
      if (v >= 0.0 && v <= rho_max) pts.insert(v);
    }
  }
  return std::vector<double>(pts.begin(), pts.end());
}

namespace {

ConcaveEnvelope hull_of_e0(const Channel& w, const std::vector<double>& grid, ExecPolicy policy) {
  const E0Grid g = sample_e0(w, grid, policy);
  if (!g.all_converged) {
    throw NumericFailure("Arimoto iteration did not converge while sampling E0");
  }
  std::vector<EnvelopePoint> pts(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) pts[i] = {g.rho[i], g.e0[i]};
  return upper_concave_envelope(pts);
}

}  // namespace

ConcaveEnvelope t_r(const Channel& w, double step, ExecPolicy policy) {
  return hull_of_e0(w, tr_rho_grid(step), policy);
}

ConcaveEnvelope t_sp(const Channel& w, double rho_max, double step, ExecPolicy policy,
                     bool refine_near_one) {
  return hull_of_e0(w, tsp_rho_grid(rho_max, step, 1e-2, refine_near_one), policy);
}

}  // namespace jscc
