#include "jscc/channel_exponent.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "jscc/envelope.hpp"
#include "jscc/opt.hpp"

namespace jscc {

namespace {

// log2 sum_i w_i * 2^(e_i) with max-shifting, tolerating w_i = 0.
double log2_weighted_exp_sum(const std::vector<double>& w, const std::vector<double>& e) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0 && e[i] > m) m = e[i];
  }
  if (m == -std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("log2_weighted_exp_sum: all weights vanish");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) s += w[i] * std::exp2(e[i] - m);
  }
  return m + std::log2(s);
}

void check_input_dist(const std::vector<double>& p_x, const Channel& w) {
  if (p_x.size() != w.input_size) {
    throw std::invalid_argument("input distribution length does not match channel input size");
  }
  double sum = 0.0;
  for (double v : p_x) {
    if (!(v >= 0.0)) throw std::invalid_argument("input distribution has a negative entry");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("input distribution does not sum to 1");
  }
}

std::vector<double> channel_pow(const Channel& w, double expo) {
  std::vector<double> out(w.p.size());
  for (std::size_t i = 0; i < w.p.size(); ++i) {
    out[i] = w.p[i] > 0.0 ? std::pow(w.p[i], expo) : 0.0;
  }
  return out;
}

// -log2 sum_y alpha_y^(1+rho) from the per-output inner sums alpha_y.
double e0_value_from_alpha(const std::vector<double>& alpha, double rho) {
  std::vector<double> w(alpha.size()), e(alpha.size());
  for (std::size_t y = 0; y < alpha.size(); ++y) {
    if (alpha[y] > 0.0) {
      w[y] = 1.0;
      e[y] = (1.0 + rho) * std::log2(alpha[y]);
    }
  }
  return -log2_weighted_exp_sum(w, e);
}

// Enumerates distributions with entries k_i / resolution over `dims` bins.
void for_each_grid_point(std::size_t dims, int resolution,
                         const std::function<void(const std::vector<double>&)>& fn) {
  std::vector<int> counts(dims, 0);
  std::vector<double> point(dims, 0.0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == dims) {
      counts[i] = left;
      for (std::size_t k = 0; k < dims; ++k) {
        point[k] = static_cast<double>(counts[k]) / resolution;
      }
      fn(point);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, resolution);
}

// Minimizes the quadratic form sum_{x,x'} P(x)P(x')M(x,x') over the simplex
// by repeated exact two-coordinate moves, starting from `p`.
double pairwise_descent(const std::vector<std::vector<double>>& m, std::vector<double>& p,
                        int max_passes = 200) {
  const std::size_t n = p.size();
  auto form = [&](const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s += v[i] * v[j] * m[i][j];
    }
    return s;
  };
  double best = form(p);
  for (int pass = 0; pass < max_passes; ++pass) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double mass = p[i] + p[j];
        if (mass <= 0.0) continue;
        double ci = 0.0, cj = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          ci += p[k] * m[i][k];
          cj += p[k] * m[j][k];
        }
        // f(u) with p_i = u, p_j = mass - u
        const double a = m[i][i] + m[j][j] - 2.0 * m[i][j];
        const double b = 2.0 * (m[i][j] * mass + ci - cj - m[j][j] * mass);
        double u = (a > 0.0) ? std::clamp(-b / (2.0 * a), 0.0, mass) : (b > 0.0 ? 0.0 : mass);
        std::vector<double> cand = p;
        cand[i] = u;
        cand[j] = mass - u;
        const double fv = form(cand);
        if (fv < best - 1e-15) {
          best = fv;
          p = cand;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return best;
}

}  // namespace

double e0_tilde(double rho, const std::vector<double>& p_x, const Channel& w) {
  if (!(rho >= 0.0)) throw std::invalid_argument("e0_tilde: rho must be >= 0");
  check_input_dist(p_x, w);
  if (rho == 0.0) return 0.0;
  const std::vector<double> wa = channel_pow(w, 1.0 / (1.0 + rho));
  std::vector<double> alpha(w.output_size, 0.0);
  for (std::size_t x = 0; x < w.input_size; ++x) {
    for (std::size_t y = 0; y < w.output_size; ++y) {
      alpha[y] += p_x[x] * wa[x * w.output_size + y];
    }
  }
  return e0_value_from_alpha(alpha, rho);
}

namespace {

// Machinery shared by the fixed-point iteration and the polish steps for
// minimizing F(P) = sum_y alpha_y^{1+rho}, alpha = P * W^{1/(1+rho)}, over the
// input simplex. Everything runs on max-shifted powers so arbitrarily large
// rho stays finite.
struct E0Workspace {
  const Channel& w;
  double rho;
  std::vector<double> wa;  // W^{1/(1+rho)}, row-major
  std::vector<double> alpha, la, s, g;

  E0Workspace(const Channel& w_, double rho_)
      : w(w_),
        rho(rho_),
        wa(channel_pow(w_, 1.0 / (1.0 + rho_))),
        alpha(w_.output_size),
        la(w_.output_size),
        s(w_.output_size),
        g(w_.input_size) {}

  void refresh(const std::vector<double>& p) {
    std::fill(alpha.begin(), alpha.end(), 0.0);
    for (std::size_t x = 0; x < w.input_size; ++x) {
      if (p[x] <= 0.0) continue;
      for (std::size_t y = 0; y < w.output_size; ++y) {
        alpha[y] += p[x] * wa[x * w.output_size + y];
      }
    }
    // s_y = alpha_y^rho up to a common factor, largest term 1
    double mt = -std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < w.output_size; ++y) {
      la[y] = alpha[y] > 0.0 ? std::log2(alpha[y]) : -std::numeric_limits<double>::infinity();
      mt = std::max(mt, la[y]);
    }
    for (std::size_t y = 0; y < w.output_size; ++y) {
      s[y] = std::isfinite(la[y]) ? std::exp2(rho * (la[y] - mt)) : 0.0;
    }
    for (std::size_t x = 0; x < w.input_size; ++x) {
      double acc = 0.0;
      for (std::size_t y = 0; y < w.output_size; ++y) acc += wa[x * w.output_size + y] * s[y];
      g[x] = acc;
    }
  }

  double value() const { return e0_value_from_alpha(alpha, rho); }

  // certified bound on E* - E in bits, from the linearization gap of the
  // convex F over the simplex: F* >= (1+rho) min_x g_x - rho F
  double certified_gap_bits(const std::vector<double>& p) const {
    double f = 0.0, mn = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < w.input_size; ++x) {
      f += p[x] * g[x];
      mn = std::min(mn, g[x]);
    }
    const double f_lb = (1.0 + rho) * mn - rho * f;
    if (!(f_lb > 0.0)) return std::numeric_limits<double>::infinity();
    return std::log2(f / f_lb);
  }

  void fixed_point_step(std::vector<double>& p, double kappa = 1.0) const {
    double mg = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < w.input_size; ++x) {
      mg = std::min(mg, std::log2(g[x]));
    }
    double norm = 0.0;
    for (std::size_t x = 0; x < w.input_size; ++x) {
      p[x] *= std::exp2(-kappa * (std::log2(g[x]) - mg) / rho);
      norm += p[x];
    }
    for (std::size_t x = 0; x < w.input_size; ++x) p[x] /= norm;
  }

  // sign of d/dgamma of sum_y (alpha_y + gamma * d_y)^{1+rho}
  double line_derivative_sign(const std::vector<double>& d, double gamma) const {
    double m = -std::numeric_limits<double>::infinity();
    std::vector<double> t(w.output_size, -std::numeric_limits<double>::infinity());
    for (std::size_t y = 0; y < w.output_size; ++y) {
      const double a = alpha[y] + gamma * d[y];
      if (a > 0.0) {
        t[y] = rho * std::log2(a);
        m = std::max(m, t[y]);
      }
    }
    double acc = 0.0;
    for (std::size_t y = 0; y < w.output_size; ++y) {
      if (std::isfinite(t[y])) acc += d[y] * std::exp2(t[y] - m);
    }
    return acc;
  }

  double line_search(const std::vector<double>& d, double gamma_max) const {
    if (line_derivative_sign(d, gamma_max) <= 0.0) return gamma_max;
    double lo = 0.0, hi = gamma_max;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (line_derivative_sign(d, mid) > 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  // One away-step Frank-Wolfe move with exact line search. F is strongly
  // convex in the output marginal alpha, so these steps close the certified
  // gap at a linear rate where the multiplicative update stalls (optima on
  // simplex faces, flat transits between supports, large rho).
  void fw_step(std::vector<double>& p) const {
    const std::size_t nx = w.input_size, ny = w.output_size;
    double f = 0.0;
    std::size_t best_x = 0, worst_x = 0;
    bool have_worst = false;
    for (std::size_t x = 0; x < nx; ++x) {
      f += p[x] * g[x];
      if (g[x] < g[best_x]) best_x = x;
      if (p[x] > 0.0 && (!have_worst || g[x] > g[worst_x])) {
        worst_x = x;
        have_worst = true;
      }
    }
    const double gap_toward = f - g[best_x];
    const double gap_away = have_worst ? g[worst_x] - f : 0.0;
    std::vector<double> d(ny);
    if (gap_toward >= gap_away || !have_worst || p[worst_x] >= 1.0) {
      for (std::size_t y = 0; y < ny; ++y) d[y] = wa[best_x * ny + y] - alpha[y];
      if (line_derivative_sign(d, 0.0) >= 0.0) return;
      const double gamma = line_search(d, 1.0);
      for (std::size_t x = 0; x < nx; ++x) p[x] *= 1.0 - gamma;
      p[best_x] += gamma;
    } else {
      for (std::size_t y = 0; y < ny; ++y) d[y] = alpha[y] - wa[worst_x * ny + y];
      if (line_derivative_sign(d, 0.0) >= 0.0) return;
      const double gamma = line_search(d, p[worst_x] / (1.0 - p[worst_x]));
      for (std::size_t x = 0; x < nx; ++x) p[x] *= 1.0 + gamma;
      p[worst_x] = std::max(p[worst_x] - gamma, 0.0);
    }
  }
};

E0Result e0_max_impl(const Channel& w, double rho, std::vector<double> p,
                     const ArimotoOptions& opt) {
  E0Workspace ws(w, rho);
  double value = 0.0, gap = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= opt.max_iters; ++it) {
    ws.refresh(p);
    value = ws.value();
    gap = ws.certified_gap_bits(p);
    if (gap <= opt.rel_tol * std::max(1.0, std::fabs(value))) {
      return {value, p, it, gap, true};
    }
    if (it <= 100) {
      ws.fixed_point_step(p);
    } else {
      ws.fw_step(p);
    }
  }
  return {value, p, opt.max_iters, gap, false};
}

}  // namespace

E0Result e0_max(const Channel& w, double rho, const ArimotoOptions& opt) {
  if (!(rho >= 0.0)) throw std::invalid_argument("e0_max: rho must be >= 0");
  const std::size_t nx = w.input_size;
  std::vector<double> uniform(nx, 1.0 / static_cast<double>(nx));
  if (rho == 0.0) return {0.0, std::move(uniform), 0, 0.0, true};
  E0Result best = e0_max_impl(w, rho, uniform, opt);
  if (best.converged) return best;

  // The certificate is global (it bounds the gap against every input), so any
  // certified rerun is the maximum. Interior saddles slow the transit from a
  // cold start; reruns on candidate support sets converge fast when they hit
  // the optimal face, and the polish resurrection step can still leave a
  // wrong face.
  auto restricted = [&](unsigned long long mask, int iters) {
    std::vector<double> start(nx, 0.0);
    int count = 0;
    for (std::size_t x = 0; x < nx; ++x) {
      if (mask & (1ull << x)) ++count;
    }
    for (std::size_t x = 0; x < nx; ++x) {
      if (mask & (1ull << x)) start[x] = 1.0 / count;
    }
    ArimotoOptions o = opt;
    o.max_iters = iters;
    return e0_max_impl(w, rho, std::move(start), o);
  };

  // support of the stalled iterate
  unsigned long long stalled = 0;
  double top = 0.0;
  for (double v : best.input_dist) top = std::max(top, v);
  for (std::size_t x = 0; x < nx; ++x) {
    if (best.input_dist[x] > 1e-3 * top) stalled |= 1ull << x;
  }
  {
    E0Result r = restricted(stalled, opt.max_iters);
    if (r.converged) return r;
    if (r.value > best.value) best = r;
  }
  if (nx <= 8) {
    for (unsigned long long mask = 1; mask < (1ull << nx); ++mask) {
      if (mask == stalled) continue;
      E0Result r = restricted(mask, opt.max_iters / 2);
      if (r.converged) return r;
      if (r.value > best.value) best = r;
    }
  }
  return best;
}

std::vector<std::vector<double>> bhattacharyya_matrix(const Channel& w) {
  const std::size_t n = w.input_size;
  std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t xp = x; xp < n; ++xp) {
      double sum = 0.0;
      for (std::size_t y = 0; y < w.output_size; ++y) {
        const double a = w.at(x, y), c = w.at(xp, y);
        if (a > 0.0 && c > 0.0) sum += std::sqrt(a) * std::sqrt(c);
      }
      b[x][xp] = b[xp][x] = sum;
    }
  }
  return b;
}

std::optional<double> equidistant_beta(const Channel& w, double rel_tol) {
  if (w.input_size < 2) return std::nullopt;
  const auto b = bhattacharyya_matrix(w);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t x = 0; x < w.input_size; ++x) {
    for (std::size_t xp = x + 1; xp < w.input_size; ++xp) {
      lo = std::min(lo, b[x][xp]);
      hi = std::max(hi, b[x][xp]);
    }
  }
  if (lo <= 0.0) return std::nullopt;
  if (hi - lo > rel_tol * hi) return std::nullopt;
  return 0.5 * (lo + hi);
}

double ex_equidistant(double rho, double beta, std::size_t input_size) {
  if (!(rho >= 1.0)) throw std::invalid_argument("ex_equidistant: rho must be >= 1");
  const double n = static_cast<double>(input_size);
  return -rho * std::log2((n - 1.0) / n * std::pow(beta, 1.0 / rho) + 1.0 / n);
}

double ex_equidistant_slope(double rho, double beta, std::size_t input_size) {
  const double n = static_cast<double>(input_size);
  const double c = 1.0 / n, d = (n - 1.0) / n;
  const double br = std::pow(beta, 1.0 / rho);
  const double inner = c + d * br;
  return -std::log2(inner) + d * br * std::log2(beta) / (rho * inner);
}

double ex_tilde(double rho, const std::vector<double>& p_x, const Channel& w) {
  if (!(rho >= 1.0)) throw std::invalid_argument("ex_tilde: rho must be >= 1");
  check_input_dist(p_x, w);
  const auto b = bhattacharyya_matrix(w);
  double sum = 0.0;
  for (std::size_t x = 0; x < w.input_size; ++x) {
    for (std::size_t xp = 0; xp < w.input_size; ++xp) {
      if (p_x[x] > 0.0 && p_x[xp] > 0.0 && b[x][xp] > 0.0) {
        sum += p_x[x] * p_x[xp] * std::pow(b[x][xp], 1.0 / rho);
      }
    }
  }
  return -rho * std::log2(sum);
}

ExResult ex_max(const Channel& w, double rho, int grid_resolution) {
  if (!(rho >= 1.0)) throw std::invalid_argument("ex_max: rho must be >= 1");
  if (auto beta = equidistant_beta(w)) {
    std::vector<double> uniform(w.input_size, 1.0 / static_cast<double>(w.input_size));
    return {ex_equidistant(rho, *beta, w.input_size), std::move(uniform), true};
  }
  const std::size_t n = w.input_size;
  const auto b = bhattacharyya_matrix(w);
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = std::pow(b[i][j], 1.0 / rho);
  }

  std::vector<double> best_p(n, 1.0 / static_cast<double>(n));
  double best = pairwise_descent(m, best_p);
  if (n <= 4) {
    std::vector<double> grid_best_p = best_p;
    double grid_best = best;
    for_each_grid_point(n, grid_resolution, [&](const std::vector<double>& p) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s += p[i] * p[j] * m[i][j];
      }
      if (s < grid_best) {
        grid_best = s;
        grid_best_p = p;
      }
    });
    if (grid_best < best) {
      best_p = grid_best_p;
      best = pairwise_descent(m, best_p);
    }
  }
  return {-rho * std::log2(best), best_p, false};
}

CapacityResult capacity(const Channel& w, double tol, int max_iters) {
  const std::size_t nx = w.input_size, ny = w.output_size;
  std::vector<double> p(nx, 1.0 / static_cast<double>(nx));
  std::vector<double> out(ny), d(nx);
  for (int it = 1; it <= max_iters; ++it) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) out[y] += p[x] * w.at(x, y);
    }
    double mutual = 0.0, upper = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < nx; ++x) {
      double dx = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        const double v = w.at(x, y);
        if (v > 0.0) dx += v * std::log2(v / out[y]);
      }
      d[x] = dx;
      mutual += p[x] * dx;
      upper = std::max(upper, dx);
    }
    if (upper - mutual <= tol) return {mutual, p, it, true};
    double norm = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      p[x] *= std::exp2(d[x] - upper);
      norm += p[x];
    }
    for (std::size_t x = 0; x < nx; ++x) p[x] /= norm;
  }
  return {0.0, p, max_iters, false};
}

SymmetricProfile::SymmetricProfile(std::size_t input_size, std::vector<SymmetricBlock> blocks)
    : input_size_(input_size), blocks_(std::move(blocks)) {}

double SymmetricProfile::e0(double rho) const {
  if (!(rho >= 0.0)) throw std::invalid_argument("SymmetricProfile::e0: rho must be >= 0");
  const double a = 1.0 / (1.0 + rho);
  std::vector<double> weight, expo;
  weight.reserve(blocks_.size());
  expo.reserve(blocks_.size());
  for (const auto& blk : blocks_) {
    double s = 0.0;
    for (double v : blk.column) {
      if (v > 0.0) s += std::pow(v, a);
    }
    if (s <= 0.0) continue;  // dead outputs contribute nothing
    weight.push_back(static_cast<double>(blk.output_count));
    expo.push_back((1.0 + rho) * std::log2(s));
  }
  return (1.0 + rho) * log2_size(input_size_) - log2_weighted_exp_sum(weight, expo);
}

double SymmetricProfile::e0_slope(double rho) const {
  const double a = 1.0 / (1.0 + rho);
  // weights ny_i * S_i^{1+rho}, shifted by the largest exponent
  std::vector<double> ls, h;
  std::vector<double> ny;
  for (const auto& blk : blocks_) {
    double s = 0.0, dot = 0.0;  // dot = sum p^a ln p
    for (double v : blk.column) {
      if (v > 0.0) {
        const double va = std::pow(v, a);
        s += va;
        dot += va * std::log(v);
      }
    }
    if (s <= 0.0) continue;
    ny.push_back(static_cast<double>(blk.output_count));
    ls.push_back(std::log2(s));
    h.push_back(std::log2(s) - a * dot / (s * std::log(2.0)));  // H(P_i^{(rho)})
  }
  double m = -std::numeric_limits<double>::infinity();
  for (double v : ls) m = std::max(m, v * (1.0 + rho));
  double wsum = 0.0, hsum = 0.0;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const double wi = ny[i] * std::exp2((1.0 + rho) * ls[i] - m);
    wsum += wi;
    hsum += wi * h[i];
  }
  return log2_size(input_size_) - hsum / wsum;
}

std::vector<double> SymmetricProfile::tilted_column(std::size_t block, double alpha) const {
  const auto& col = blocks_.at(block).column;
  const double a = 1.0 / (1.0 + alpha);
  std::vector<double> t(col.size(), 0.0);
  double sum = 0.0;
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (col[j] > 0.0) {
      t[j] = std::pow(col[j], a);
      sum += t[j];
    }
  }
  for (double& v : t) v /= sum;
  return t;
}

std::optional<SymmetricProfile> symmetric_profile(const Channel& w, double tol) {
  const std::size_t nx = w.input_size, ny = w.output_size;
  // cluster columns by sorted entries
  std::vector<std::vector<double>> cols(ny);
  for (std::size_t y = 0; y < ny; ++y) {
    cols[y].resize(nx);
    for (std::size_t x = 0; x < nx; ++x) cols[y][x] = w.at(x, y);
    std::sort(cols[y].begin(), cols[y].end());
  }
  std::vector<std::size_t> order(ny);
  for (std::size_t y = 0; y < ny; ++y) order[y] = y;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cols[a] < cols[b]; });
  auto same_key = [&](std::size_t a, std::size_t b) {
    for (std::size_t x = 0; x < nx; ++x) {
      if (std::fabs(cols[a][x] - cols[b][x]) > tol) return false;
    }
    return true;
  };

  std::vector<SymmetricBlock> blocks;
  std::size_t i = 0;
  while (i < ny) {
    std::size_t j = i;
    while (j + 1 < ny && same_key(order[j], order[j + 1])) ++j;
    // block = columns order[i..j]; rows restricted to it must share a multiset
    std::vector<std::vector<double>> row_sets(nx);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t k = i; k <= j; ++k) row_sets[x].push_back(w.at(x, order[k]));
      std::sort(row_sets[x].begin(), row_sets[x].end());
    }
    for (std::size_t x = 1; x < nx; ++x) {
      for (std::size_t k = 0; k < row_sets[0].size(); ++k) {
        if (std::fabs(row_sets[x][k] - row_sets[0][k]) > tol) return std::nullopt;
      }
    }
    blocks.push_back({j - i + 1, cols[order[i]]});
    i = j + 1;
  }
  return SymmetricProfile(nx, std::move(blocks));
}

bool has_full_support_column(const Channel& w) {
  for (std::size_t y = 0; y < w.output_size; ++y) {
    bool full = true;
    for (std::size_t x = 0; x < w.input_size; ++x) {
      if (!(w.at(x, y) > 0.0)) {
        full = false;
        break;
      }
    }
    if (full) return true;
  }
  return false;
}

double r_infinity_numeric(const Channel& w, double tol, double rho_cap) {
  ArimotoOptions opt;
  opt.max_iters = 5000;
  std::vector<double> p(w.input_size, 1.0 / static_cast<double>(w.input_size));
  double prev = std::numeric_limits<double>::infinity();
  double value = 0.0;
  for (double rho = 8.0; rho <= rho_cap; rho *= 2.0) {
    const E0Result r = e0_max_impl(w, rho, p, opt);
    p = r.input_dist;  // warm start the next doubling
    value = r.value / rho;
    if (std::fabs(value - prev) < tol) break;
    prev = value;
  }
  return std::max(value, 0.0);
}

ExtReal expurgated_zero_rate_exponent(const Channel& w, int grid_resolution) {
  const std::size_t n = w.input_size;
  const auto b = bhattacharyya_matrix(w);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t xp = x + 1; xp < n; ++xp) {
      if (!(b[x][xp] > 0.0)) return ExtReal::infinity();  // positive zero-error capacity
    }
  }
  if (auto beta = equidistant_beta(w)) {
    const double nn = static_cast<double>(n);
    return ExtReal::of(-(nn - 1.0) / nn * std::log2(*beta));
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = std::log2(std::max(b[i][j], 1e-300));
  }
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  double best = pairwise_descent(m, p);
  if (n <= 4) {
    for_each_grid_point(n, grid_resolution, [&](const std::vector<double>& cand) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s += cand[i] * cand[j] * m[i][j];
      }
      if (s < best) {
        best = s;
        p = cand;
      }
    });
    best = pairwise_descent(m, p);
  }
  return ExtReal::of(-best);
}

ChannelRates channel_rates(const Channel& w, const RatesOptions& opt) {
  ChannelRates rates;
  const auto profile = symmetric_profile(w);
  if (profile) {
    rates.capacity = profile->capacity();
    rates.critical_rate = profile->e0_slope(1.0);
  } else {
    const CapacityResult cap = capacity(w);
    if (!cap.converged) throw NumericFailure("capacity iteration did not converge");
    rates.capacity = cap.value;
    const ConcaveEnvelope hull = t_sp(w, 8.0, opt.rho_step, ExecPolicy::Parallel, true);
    rates.critical_rate = hull.right_slope_at(1.0);
  }

  if (auto beta = equidistant_beta(w)) {
    rates.expurgated_rate = ex_equidistant_slope(1.0, *beta, w.input_size);
  } else {
    // hull of sampled Ex over [1, 4], right slope at 1; approximate maximizer
    std::vector<EnvelopePoint> samples;
    for (double rho = 1.0; rho <= 4.0 + 1e-12; rho += 1.0 / 16.0) {
      samples.push_back({rho, ex_max(w, rho, 60).value});
    }
    const ConcaveEnvelope hull = upper_concave_envelope(samples);
    rates.expurgated_rate = hull.right_slope_at(1.0);
    rates.expurgated_rate_approximate = true;
  }

  rates.r_infinity = has_full_support_column(w) ? 0.0 : r_infinity_numeric(w);

  const auto b = bhattacharyya_matrix(w);
  rates.zero_error_capacity_is_zero = true;
  for (std::size_t x = 0; x < w.input_size && rates.zero_error_capacity_is_zero; ++x) {
    for (std::size_t xp = x + 1; xp < w.input_size; ++xp) {
      if (!(b[x][xp] > 0.0)) {
        rates.zero_error_capacity_is_zero = false;
        break;
      }
    }
  }
  return rates;
}

std::vector<ChannelCurvePoint> exponent_curves(const Channel& w, const std::vector<double>& r_grid,
                                               const CurveOptions& opt) {
  const ConcaveEnvelope hull_r = t_r(w, opt.rho_step);
  double rho_max = opt.rho_max;
  ConcaveEnvelope hull_sp = t_sp(w, rho_max, opt.rho_step);
  const double r_inf = has_full_support_column(w) ? 0.0 : r_infinity_numeric(w);
  const auto beta = equidistant_beta(w);

  std::vector<ChannelCurvePoint> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) {
    ChannelCurvePoint pt;
    pt.rate = r;
    pt.e_r = hull_r.conjugate_max(r);
    if (r <= r_inf) {
      pt.e_sp = ExtReal::infinity();
    } else {
      while (hull_sp.conjugate_argmax(r) + 1 == hull_sp.knots().size() && rho_max < 1024.0) {
        rho_max *= 2.0;
        hull_sp = t_sp(w, rho_max, opt.rho_step);
      }
      pt.e_sp = ExtReal::of(hull_sp.conjugate_max(r));
    }
    if (opt.with_expurgated && beta) {
      auto f = [&](double rho) { return ex_equidistant(rho, *beta, w.input_size) - rho * r; };
      auto [hi, capped] = expand_bracket(f, 1.0, 2.0, 4096.0);
      (void)capped;
      const GoldenResult g = maximize_golden(f, 1.0, hi, 1e-10);
      pt.e_ex = std::max(g.value, f(1.0));
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace jscc
