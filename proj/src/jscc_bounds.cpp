#include "jscc/jscc_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jscc/opt.hpp"

namespace jscc {

JsccProblem::JsccProblem(Source s, Channel w, double t_rate)
    : source(std::move(s)), channel(std::move(w)), t(t_rate) {
  if (!(t > 0.0)) throw std::invalid_argument("transmission rate t must be positive");
}

JsccSolver::JsccSolver(JsccProblem p, SolverOptions opt)
    : p_(std::move(p)), opt_(opt), profile_(symmetric_profile(p_.channel)) {
  t_entropy_ = p_.t * entropy(p_.source.probs);
  t_log_alphabet_ = p_.t * log2_size(p_.source.alphabet_size());
  t_source_crit_ = p_.t * tilted_entropy(p_.source, 1.0);
}

double JsccSolver::capacity() {
  if (!capacity_) {
    if (profile_) {
      capacity_ = profile_->capacity();
    } else {
      const CapacityResult c = jscc::capacity(p_.channel);
      if (!c.converged) throw NumericFailure("capacity iteration did not converge");
      capacity_ = c.value;
    }
  }
  return *capacity_;
}

double JsccSolver::critical_rate() {
  if (!critical_rate_) {
    if (profile_) {
      critical_rate_ = profile_->e0_slope(1.0);
    } else {
      const ConcaveEnvelope hull = t_sp(p_.channel, opt_.rho_max, opt_.rho_step, opt_.policy, true);
      critical_rate_ = hull.right_slope_at(1.0);
    }
  }
  return *critical_rate_;
}

double JsccSolver::expurgated_rate() {
  if (!expurgated_rate_) {
    if (!equi_checked_) {
      equi_beta_ = equidistant_beta(p_.channel);
      equi_checked_ = true;
    }
    if (equi_beta_) {
      expurgated_rate_ = ex_equidistant_slope(1.0, *equi_beta_, p_.channel.input_size);
    } else {
      std::vector<EnvelopePoint> samples;
      for (double rho = 1.0; rho <= 4.0 + 1e-12; rho += 1.0 / 16.0) {
        samples.push_back({rho, ex_max(p_.channel, rho, 60).value});
      }
      expurgated_rate_ = upper_concave_envelope(samples).right_slope_at(1.0);
      expurgated_rate_approx_ = true;
    }
  }
  return *expurgated_rate_;
}

double JsccSolver::r_infinity() {
  if (!r_infinity_) {
    r_infinity_ =
        has_full_support_column(p_.channel) ? 0.0 : r_infinity_numeric(p_.channel);
  }
  return *r_infinity_;
}

const ChannelRates& JsccSolver::rates() {
  if (!rates_) {
    ChannelRates r;
    r.capacity = capacity();
    r.critical_rate = critical_rate();
    r.expurgated_rate = expurgated_rate();
    r.r_infinity = r_infinity();
    r.expurgated_rate_approximate = expurgated_rate_approx_;
    const auto b = bhattacharyya_matrix(p_.channel);
    r.zero_error_capacity_is_zero = true;
    for (std::size_t x = 0; x < p_.channel.input_size && r.zero_error_capacity_is_zero; ++x) {
      for (std::size_t xp = x + 1; xp < p_.channel.input_size; ++xp) {
        if (!(b[x][xp] > 0.0)) {
          r.zero_error_capacity_is_zero = false;
          break;
        }
      }
    }
    rates_ = r;
  }
  return *rates_;
}

double JsccSolver::e0_at_one() {
  if (!e0_one_) {
    if (profile_) {
      e0_one_ = profile_->e0(1.0);
    } else {
      const E0Result r = e0_max(p_.channel, 1.0, opt_.arimoto);
      if (!r.converged) throw NumericFailure("Arimoto iteration did not converge at rho = 1");
      e0_one_ = r.value;
    }
  }
  return *e0_one_;
}

double JsccSolver::t_es(double rho) const { return p_.t * source_function(p_.source, rho); }

double JsccSolver::t_source_exponent(double rate) {
  const ExtReal e = t_source_exponent_ext(rate);
  return e.value();
}

ExtReal JsccSolver::t_source_exponent_ext(double rate) {
  const ExtReal e = source_error_exponent(p_.source, rate / p_.t);
  if (e.is_infinite()) return e;
  return ExtReal::of(p_.t * e.value());
}

const ConcaveEnvelope& JsccSolver::tr_hull() {
  if (!tr_) {
    const E0Grid g = sample_e0(p_.channel, tr_rho_grid(opt_.rho_step), opt_.policy, opt_.arimoto);
    if (!g.all_converged) {
      throw NumericFailure("Arimoto iteration did not converge while sampling E0 on [0,1]");
    }
    tr_samples_ = g;
    std::vector<EnvelopePoint> pts(g.rho.size());
    for (std::size_t i = 0; i < g.rho.size(); ++i) pts[i] = {g.rho[i], g.e0[i]};
    tr_ = upper_concave_envelope(pts);
  }
  return *tr_;
}

double JsccSolver::dual_objective(double rho, double shift) const {
  return -(p_.t * (source_function(p_.source, rho) - rho * shift));
}

const ConcaveEnvelope& JsccSolver::tsp_hull_for(double rho_lo, double shift) {
  const double needed = std::min(std::max(opt_.rho_max, 4.0 * rho_lo), opt_.rho_cap);
  if (!tsp_ || tsp_rho_max_ < needed) {
    tsp_rho_max_ = needed;
    tsp_ = t_sp(p_.channel, tsp_rho_max_, opt_.rho_step, opt_.policy);
  }
  for (;;) {
    // locate the knot maximizing the objective; extend the domain until the
    // maximizer is safely inside it
    const auto& knots = tsp_->knots();
    double best = -std::numeric_limits<double>::infinity();
    double best_x = 0.0;
    for (const auto& k : knots) {
      if (k.x < rho_lo) continue;
      const double v = k.y + dual_objective(k.x, shift);
      if (v > best) {
        best = v;
        best_x = k.x;
      }
    }
    tsp_capped_ = false;
    if (best_x > 0.5 * tsp_rho_max_) {
      if (tsp_rho_max_ >= opt_.rho_cap) {
        tsp_capped_ = true;
        break;
      }
      tsp_rho_max_ = std::min(2.0 * tsp_rho_max_, opt_.rho_cap);
      tsp_ = t_sp(p_.channel, tsp_rho_max_, opt_.rho_step, opt_.policy);
      continue;
    }
    break;
  }
  return *tsp_;
}

DualBound JsccSolver::random_coding_shifted(double rho_lo, double shift) {
  GoldenResult g;
  if (profile_) {
    auto phi = [&](double rho) { return profile_->e0(rho) + dual_objective(rho, shift); };
    g = maximize_golden(phi, rho_lo, 1.0, opt_.golden_xtol);
    g.value = std::max({g.value, phi(rho_lo), phi(1.0)});
  } else {
    const ConcaveEnvelope& hull = tr_hull();
    auto phi = [&](double rho) { return hull.eval(rho) + dual_objective(rho, shift); };
    g = maximize_golden(phi, rho_lo, 1.0, opt_.golden_xtol);
    g.value = std::max({g.value, phi(rho_lo), phi(1.0)});
  }
  return {g.value, g.x, p_.t * tilted_entropy(p_.source, g.x)};
}

SpBound JsccSolver::sphere_packing_shifted(double rho_lo, double shift) {
  GoldenResult g;
  bool capped = false;
  if (profile_) {
    auto phi = [&](double rho) { return profile_->e0(rho) + dual_objective(rho, shift); };
    auto [hi, cap] = expand_bracket(phi, rho_lo, std::max(2.0, 2.0 * rho_lo), opt_.rho_cap);
    capped = cap;
    g = maximize_golden(phi, rho_lo, hi, opt_.golden_xtol);
    g.value = std::max(g.value, phi(rho_lo));
  } else {
    const ConcaveEnvelope& hull = tsp_hull_for(rho_lo, shift);
    capped = tsp_capped_;
    auto phi = [&](double rho) { return hull.eval(rho) + dual_objective(rho, shift); };
    const double hi = hull.domain_hi();
    const double lo = std::min(rho_lo, hi);
    capped = capped || rho_lo > hi;
    g = maximize_golden(phi, lo, hi, opt_.golden_xtol);
    g.value = std::max(g.value, phi(lo));
  }
  return {ExtReal::of(g.value), g.x, p_.t * tilted_entropy(p_.source, g.x), capped};
}

DualBound JsccSolver::random_coding() {
  if (zero_exponent()) return {0.0, 0.0, t_entropy_};
  return random_coding_shifted(0.0, 0.0);
}

SpBound JsccSolver::sphere_packing() {
  if (zero_exponent()) return {ExtReal::of(0.0), 0.0, t_entropy_, false};
  if (t_log_alphabet_ <= r_infinity()) return {ExtReal::infinity(), 0.0, 0.0, false};
  return sphere_packing_shifted(0.0, 0.0);
}

double JsccSolver::gallager() {
  if (zero_exponent()) return 0.0;
  if (profile_) return random_coding_shifted(0.0, 0.0).value;
  tr_hull();  // fills tr_samples_
  double best = 0.0;
  for (std::size_t i = 0; i < tr_samples_->rho.size(); ++i) {
    best = std::max(best, tr_samples_->e0[i] + dual_objective(tr_samples_->rho[i], 0.0));
  }
  return best;
}

std::optional<ExpurgatedBound> JsccSolver::expurgated() {
  if (!equi_checked_) {
    equi_beta_ = equidistant_beta(p_.channel);
    equi_checked_ = true;
  }
  const auto b = bhattacharyya_matrix(p_.channel);
  for (std::size_t x = 0; x < p_.channel.input_size; ++x) {
    for (std::size_t xp = x + 1; xp < p_.channel.input_size; ++xp) {
      if (!(b[x][xp] > 0.0)) return std::nullopt;  // positive zero-error capacity
    }
  }
  ExpurgatedBound out;
  if (equi_beta_) {
    auto phi = [&](double rho) {
      return ex_equidistant(rho, *equi_beta_, p_.channel.input_size) + dual_objective(rho, 0.0);
    };
    auto [hi, capped] = expand_bracket(phi, 1.0, 2.0, opt_.rho_cap);
    (void)capped;
    GoldenResult g = maximize_golden(phi, 1.0, hi, opt_.golden_xtol);
    const double at_one = phi(1.0);
    if (at_one >= g.value) g = {1.0, at_one};
    out.value = g.value;
    out.rho = g.x;
    out.assumption = ExAssumption::VerifiedEquidistant;
  } else {
    std::vector<EnvelopePoint> samples;
    for (double rho = 1.0; rho <= 8.0 + 1e-12; rho += 0.125) {
      samples.push_back({rho, ex_max(p_.channel, rho, 60).value});
    }
    const ConcaveEnvelope hull = upper_concave_envelope(samples);
    auto phi = [&](double rho) { return hull.eval(rho) + dual_objective(rho, 0.0); };
    GoldenResult g = maximize_golden(phi, 1.0, hull.domain_hi(), opt_.golden_xtol);
    const double at_one = phi(1.0);
    if (at_one >= g.value) g = {1.0, at_one};
    out.value = g.value;
    out.rho = g.x;
    out.assumption = ExAssumption::Assumed;
  }
  out.rate = out.rho > 1.0 + 1e-9 ? p_.t * tilted_entropy(p_.source, out.rho) : t_source_crit_;
  return out;
}

BoundReport JsccSolver::classify() {
  if (p_.source.is_uniform()) {
    throw std::invalid_argument(
        "source is uniform: lossless joint coding reduces to channel coding, so the "
        "bound classification requires a nonuniform source");
  }
  BoundReport rep;
  const ChannelRates& cr = rates();
  rep.capacity = cr.capacity;
  rep.critical_rate = cr.critical_rate;
  rep.expurgated_rate = cr.expurgated_rate;
  rep.r_infinity = cr.r_infinity;
  rep.zero_error_capacity_is_zero = cr.zero_error_capacity_is_zero;
  rep.t_entropy = t_entropy_;
  rep.t_log_alphabet = t_log_alphabet_;
  rep.t_source_critical_rate = t_source_crit_;

  if (zero_exponent()) {
    rep.tightness = Tightness::ZeroExponent;
    rep.exact_value = 0.0;
    rep.upper_sp = ExtReal::of(0.0);
    rep.r_under_m = t_entropy_;
    rep.r_bar_m = t_entropy_;
    return rep;
  }

  const SpBound sp = sphere_packing();
  rep.upper_sp = sp.value;
  rep.rho_capped = sp.capped;

  if (sp.value.is_infinite()) {
    rep.tightness = Tightness::Bracketed;
    const DualBound rc = random_coding();
    rep.lower_rc = rc.value;
    rep.rho_under_star = rc.rho;
    rep.r_under_m = rc.rate;
    rep.lower_gallager = gallager();
    return rep;
  }

  rep.rho_bar_star = sp.rho;
  rep.r_bar_m = sp.rate;

  const bool exact = t_source_crit_ >= cr.critical_rate - opt_.rate_tol;
  if (exact) {
    rep.tightness = Tightness::Exact;
    rep.exact_value = sp.value.value();
    const DualBound rc = random_coding();
    rep.lower_rc = rc.value;
    rep.rho_under_star = rc.rho;
    rep.r_under_m = rc.rate;
  } else {
    rep.tightness = Tightness::Bracketed;
    rep.lower_rc = e0_at_one() - t_es(1.0);  // the simple closed form is exact here
    rep.rho_under_star = 1.0;
    rep.r_under_m = t_source_crit_;
  }
  rep.lower_gallager = gallager();

  if (cr.zero_error_capacity_is_zero) {
    const auto ex = expurgated();
    if (ex) {
      rep.expurgated_applicable = true;
      rep.ex_assumption = ex->assumption;
      rep.expurgated_improves = t_source_crit_ < cr.expurgated_rate;
      rep.lower_ex = ex->value;
      rep.rho_under_x = ex->rho;
      rep.r_under_xm = ex->rate;
    }
  }
  return rep;
}

PrimalResult JsccSolver::primal_oracle(PrimalKind kind) {
  const double r_lo = t_entropy_;
  const double r_hi = t_log_alphabet_;
  const double step = opt_.primal_r_step * p_.t;
  const std::size_t n = static_cast<std::size_t>(std::ceil((r_hi - r_lo) / step)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = std::min(r_lo + step * static_cast<double>(i), r_hi);
  grid.back() = r_hi;

  // channel-side values
  std::vector<ExtReal> chan(n);
  if (!profile_ && kind != PrimalKind::Expurgated) {
    const ConcaveEnvelope& hull = kind == PrimalKind::RandomCoding ? tr_hull() : tsp_hull_for(0.0, 0.0);
    const std::vector<double> vals = hull.conjugate_many(grid);
    const double r_inf = kind == PrimalKind::SpherePacking ? r_infinity() : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (kind == PrimalKind::SpherePacking && grid[i] <= r_inf) {
        chan[i] = ExtReal::infinity();
      } else {
        chan[i] = ExtReal::of(std::max(vals[i], 0.0));
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      switch (kind) {
        case PrimalKind::RandomCoding:
          chan[i] = ExtReal::of(e_r_at(grid[i]));
          break;
        case PrimalKind::SpherePacking:
          chan[i] = e_sp_at(grid[i]);
          break;
        case PrimalKind::Expurgated: {
          const auto v = e_ex_at(grid[i]);
          if (!v) throw std::invalid_argument("expurgated primal oracle requires an equidistant channel");
          chan[i] = ExtReal::of(*v);
          break;
        }
      }
    }
  }

  // source-side values with a warm-started root for the tilt parameter
  const double h = entropy(p_.source.probs);
  const double top = log2_size(p_.source.alphabet_size());
  double warm = 0.0;
  PrimalResult best{std::numeric_limits<double>::infinity(), r_lo};
  for (std::size_t i = 0; i < n; ++i) {
    if (chan[i].is_infinite()) continue;
    const double r_src = grid[i] / p_.t;
    double src = 0.0;
    if (r_src > h) {
      if (r_src >= top - 1e-13 || p_.source.is_uniform()) {
        src = p_.t * kl_divergence(tilted_source(p_.source, ExtReal::infinity()).probs, p_.source.probs)
                  .value();
      } else {
        double lo = warm, hi = std::max(2.0 * warm, 1.0);
        while (tilted_entropy(p_.source, hi) < r_src) hi *= 2.0;
        const double rho = bisect_root(
            [&](double x) { return tilted_entropy(p_.source, x) - r_src; }, lo, hi, 1e-13);
        warm = rho;
        src = p_.t * kl_divergence(tilted_source(p_.source, rho).probs, p_.source.probs).value();
      }
    }
    const double total = src + chan[i].value();
    if (total < best.value) best = {total, grid[i]};
  }
  return best;
}

SymmetricExactResult JsccSolver::symmetric_exact() {
  SymmetricExactResult out;
  if (!profile_) return out;
  if (p_.source.is_uniform()) {
    throw std::invalid_argument("symmetric_exact requires a nonuniform source");
  }
  out.symmetric = true;
  auto slope = [&](double rho) {
    return profile_->e0_slope(rho) - p_.t * tilted_entropy(p_.source, rho);
  };
  out.co1 = slope(0.0) > 0.0;  // capacity exceeds t H(Q)
  if (!out.co1) {
    out.value = 0.0;
    return out;
  }
  out.co2 = slope(1.0) <= 0.0;
  if (!out.co2) return out;
  const double rho = bisect_root(slope, 0.0, 1.0, 1e-13);
  out.rho = rho;
  out.value = profile_->e0(rho) - t_es(rho);
  return out;
}

double JsccSolver::e_r_at(double rate) {
  if (profile_) {
    auto phi = [&](double rho) { return profile_->e0(rho) - rho * rate; };
    const GoldenResult g = maximize_golden(phi, 0.0, 1.0, opt_.golden_xtol);
    return std::max({g.value, 0.0, phi(1.0)});
  }
  return std::max(tr_hull().conjugate_max(rate), 0.0);
}

ExtReal JsccSolver::e_sp_at(double rate) {
  if (rate <= r_infinity()) return ExtReal::infinity();
  if (profile_) {
    auto phi = [&](double rho) { return profile_->e0(rho) - rho * rate; };
    auto [hi, capped] = expand_bracket(phi, 0.0, 2.0, opt_.rho_cap);
    (void)capped;
    const GoldenResult g = maximize_golden(phi, 0.0, hi, opt_.golden_xtol);
    return ExtReal::of(std::max(g.value, 0.0));
  }
  return ExtReal::of(std::max(tsp_hull_for(0.0, 0.0).conjugate_max(rate), 0.0));
}

std::optional<double> JsccSolver::e_ex_at(double rate) {
  if (!equi_checked_) {
    equi_beta_ = equidistant_beta(p_.channel);
    equi_checked_ = true;
  }
  if (!equi_beta_) return std::nullopt;
  auto phi = [&](double rho) {
    return ex_equidistant(rho, *equi_beta_, p_.channel.input_size) - rho * rate;
  };
  auto [hi, capped] = expand_bracket(phi, 1.0, 2.0, opt_.rho_cap);
  (void)capped;
  const GoldenResult g = maximize_golden(phi, 1.0, hi, opt_.golden_xtol);
  return std::max(g.value, phi(1.0));
}

DualBound random_coding_bound(const JsccProblem& p, const SolverOptions& opt) {
  JsccSolver s(p, opt);
  return s.random_coding();
}

SpBound sphere_packing_bound(const JsccProblem& p, const SolverOptions& opt) {
  JsccSolver s(p, opt);
  return s.sphere_packing();
}

double gallager_bound(const JsccProblem& p, const SolverOptions& opt) {
  JsccSolver s(p, opt);
  return s.gallager();
}

std::optional<ExpurgatedBound> expurgated_bound(const JsccProblem& p, const SolverOptions& opt) {
  JsccSolver s(p, opt);
  return s.expurgated();
}

BoundReport classify(const JsccProblem& p, const SolverOptions& opt) {
  JsccSolver s(p, opt);
  return s.classify();
}

}  // namespace jscc
