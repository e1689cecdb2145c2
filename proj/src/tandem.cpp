#include "jscc/tandem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jscc/opt.hpp"

namespace jscc {

namespace {

// Intersection of the strictly increasing source curve t e(R/t, Q) with a
// nonincreasing channel curve on [tH(Q), t log|S|], if any.
template <class Curve>
std::optional<double> intersection(JsccSolver& s, Curve&& channel_curve) {
  const double lo = s.t_entropy();
  const double hi = s.t_log_alphabet();
  const double src_top = s.t_source_exponent(hi);
  const ExtReal top = channel_curve(hi);
  if (top.is_infinite() || src_top < top.value()) return std::nullopt;
  auto h = [&](double r) {
    const ExtReal c = channel_curve(r);
    if (c.is_infinite()) return -1.0;  // still below the channel curve
    return s.t_source_exponent(r) - c.value();
  };
  if (h(lo) >= 0.0) return lo;
  return bisect_root(h, lo, hi, 1e-12);
}

}  // namespace

TandemReport tandem_report(JsccSolver& s) {
  TandemReport rep;
  const double t = s.problem().t;
  const double t_log_s = s.t_log_alphabet();
  const Source& q = s.problem().source;

  rep.source_uniform = q.is_uniform();

  if (s.t_entropy() >= s.capacity() && !rep.source_uniform) {
    // no positive exponent on either side
    rep.zero_exponents = true;
    rep.et_value = 0.0;
    rep.ej_value = 0.0;
    rep.ej_upper = ExtReal::of(0.0);
    rep.r_o = t_log_s;
    rep.r_s = t_log_s;
    return rep;
  }

  const double r_cr = s.rates().critical_rate;

  if (rep.source_uniform) {
    // incompressible source: both systems do pure channel coding at t log|S|
    rep.r_o = t_log_s;
    rep.r_s = t_log_s;
    const double er = s.e_r_at(t_log_s);
    const ExtReal esp = s.e_sp_at(t_log_s);
    rep.et_lower = er;
    rep.et_upper = esp.is_infinite() ? std::numeric_limits<double>::infinity() : esp.value();
    rep.ej_lower = er;
    rep.ej_upper = esp;
    if (t_log_s >= r_cr - s.options().rate_tol && esp.is_finite()) {
      rep.et_value = esp.value();
      rep.ej_value = esp.value();
    }
    rep.ratio = 1.0;  // identical systems
    if (rep.et_value) rep.doubling_holds = true;
    return rep;
  }

  // ---- tandem exponent ----
  const auto r_or = intersection(s, [&](double r) { return ExtReal::of(s.e_r_at(r)); });
  const auto r_osp = intersection(s, [&](double r) { return s.e_sp_at(r); });

  rep.r_s = r_osp.value_or(t_log_s);
  rep.r_s_from_intersection = r_osp.has_value();
  rep.r_o = rep.r_s;
  rep.r_o_from_intersection = r_osp.has_value();

  rep.et_lower = r_or ? s.t_source_exponent(*r_or) : s.e_r_at(t_log_s);
  const ExtReal esp_cap = r_osp ? ExtReal::of(s.t_source_exponent(*r_osp)) : s.e_sp_at(t_log_s);
  rep.et_upper = esp_cap.is_infinite() ? std::numeric_limits<double>::infinity() : esp_cap.value();

  const double rate_tol = s.options().rate_tol;
  const bool et_exact = r_osp ? (*r_osp >= r_cr - rate_tol)
                              : (!r_or && t_log_s >= r_cr - rate_tol && esp_cap.is_finite());
  if (et_exact) {
    rep.et_value = esp_cap.value();
    rep.et_lower = rep.et_upper = esp_cap.value();
  }

  // ---- gamma and the source exponent at the critical rate ----
  if (r_cr <= t_log_s + 1e-15) {
    if (s.t_entropy() > r_cr) {
      rep.gamma = 0.0;
      rep.t_d_gamma = 0.0;
    } else {
      const ExtReal g = tilted_entropy_root(q, std::min(r_cr / t, log2_size(q.alphabet_size())));
      rep.gamma_infinite = g.is_infinite();
      rep.gamma = g.is_infinite() ? std::numeric_limits<double>::infinity() : g.value();
      rep.t_d_gamma = t * kl_divergence(tilted_source(q, g).probs, q.probs).value();
    }
  }

  // ---- joint exponent summary ----
  const BoundReport bounds = s.classify();
  rep.ej_upper = bounds.upper_sp;
  rep.ej_lower = bounds.lower_rc;
  if (bounds.lower_ex && bounds.expurgated_improves) {
    rep.ej_lower = std::max(rep.ej_lower, *bounds.lower_ex);
  }
  if (bounds.tightness == Tightness::Exact) rep.ej_value = *bounds.exact_value;

  const double e0_one = s.e0_at_one();
  const double straight_lhs = e0_one - s.t_es(1.0);
  const double t_rcr_s = s.t_source_critical_rate();

  // ---- Theorem-style predicates for E_J > E_T ----
  if (rep.gamma) {
    const double et_side = e0_one - rep.t_d_gamma;
    rep.either_exact_condition = std::max(t_rcr_s, et_side) >= r_cr;
    if (rep.either_exact_condition) {
      if (std::min(t_rcr_s, et_side) >= r_cr) {
        rep.condition_case = 'a';
        if (rep.ej_value) {
          const double big_t = *rep.ej_value;  // T_sp(rho*) - tEs(rho*)
          const double td_rho =
              t * kl_divergence(tilted_source(q, bounds.rho_bar_star).probs, q.probs).value();
          rep.case_gap_lower = 0.5 * big_t - std::fabs(0.5 * big_t - td_rho);
        }
      } else if (t_rcr_s >= r_cr) {
        rep.condition_case = 'b';
        if (rep.ej_value) rep.case_gap_lower = *rep.ej_value - rep.t_d_gamma;
      } else {
        rep.condition_case = 'c';
        rep.case_gap_lower = r_cr - s.t_es(1.0);
      }
    }

    // straight-line predicate: needs E_ex(0, W) finite and R_cr <= t log|S|
    const ExtReal eex0 = expurgated_zero_rate_exponent(s.problem().channel);
    if (eex0.is_infinite()) {
      rep.straight_line_skipped = "unbounded zero-rate expurgated exponent";
    } else if (!(r_cr > 0.0)) {
      rep.straight_line_skipped = "channel critical rate is zero";
    } else {
      const double log_s_gbar = log2_size(q.alphabet_size()) + std::log2(geometric_mean(q.probs));
      const double k1 = (kl_divergence(tilted_source(q, 1.0).probs, q.probs).value() + log_s_gbar) /
                        (tilted_entropy(q, 1.0) - log2_size(q.alphabet_size()));
      const double k2 = (e0_one - eex0.value()) / r_cr - 1.0;
      rep.k1 = k1;
      rep.k2 = k2;
      if (std::fabs(k1 - k2) < 1e-12) {
        rep.straight_line_skipped = "degenerate slopes k1 = k2";
      } else {
        const double e_r_l =
            (k1 * k2 * t_log_s + k2 * t * log_s_gbar + k1 * eex0.value()) / (k1 - k2);
        rep.e_r_l = e_r_l;
        rep.straight_line_condition = straight_lhs >= e_r_l;
      }
    }

    rep.tilted_condition = straight_lhs >= rep.t_d_gamma;
  }
  rep.beats_tandem =
      rep.either_exact_condition || rep.straight_line_condition || rep.tilted_condition;

  // ---- doubling law ----
  if (rep.ej_value && rep.et_value) {
    rep.doubling_holds = (*rep.et_value <= *rep.ej_value + 1e-9) &&
                         (*rep.ej_value <= 2.0 * *rep.et_value + 1e-9);
  }
  if (rep.ej_value && t_rcr_s >= r_cr - rate_tol) {
    const double td_rho =
        t * kl_divergence(tilted_source(q, bounds.rho_bar_star).probs, q.probs).value();
    rep.doubling_equality_condition = std::fabs(*rep.ej_value - 2.0 * td_rho) <= 1e-6;
  }

  // ---- ratio ----
  if (rep.ej_value && rep.et_value) {
    rep.ratio = *rep.ej_value / *rep.et_value;
  } else {
    rep.ratio = std::max(1.0, rep.ej_lower / rep.et_upper);
    rep.ratio_is_lower_bound = true;
  }
  return rep;
}

TandemReport tandem_report(const JsccProblem& p, const SolverOptions& opt) {
  JsccSolver s(p, opt);
  return tandem_report(s);
}

}  // namespace jscc
