#include <doctest.h>

#include <cmath>

#include "jscc/channel_models.hpp"
#include "jscc/lossy.hpp"
#include "jscc/source_exponent.hpp"

using namespace jscc;

TEST_CASE("binary rate-distortion function") {
  CHECK(rate_distortion_binary(0.3, 0.0) == doctest::Approx(binary_entropy(0.3)));
  CHECK(rate_distortion_binary(0.3, 0.3) == doctest::Approx(0.0));
  CHECK(rate_distortion_binary(0.3, 0.4) == doctest::Approx(0.0));
  CHECK(rate_distortion_binary(0.3, 0.1) ==
        doctest::Approx(binary_entropy(0.3) - binary_entropy(0.1)).epsilon(1e-13));
  CHECK_THROWS_AS(rate_distortion_binary(0.7, 0.1), std::invalid_argument);
}

TEST_CASE("distortion-shifted source function and rho_zero") {
  CHECK(es_delta(0.2, 0.1, 1.5) ==
        doctest::Approx(source_function(Source({0.2, 0.8}), 1.5) - 1.5 * binary_entropy(0.1))
            .epsilon(1e-12));
  CHECK(rho_zero(0.3, 0.2) == 0.0);
  // q < delta: the root satisfies H(Q^{(rho0)}) = h_b(delta)
  const double r0 = rho_zero(0.1, 0.3);
  CHECK(r0 > 0.0);
  CHECK(tilted_entropy(Source({0.1, 0.9}), r0) == doctest::Approx(binary_entropy(0.3)).epsilon(1e-9));
}

TEST_CASE("lossy source exponent branches") {
  // zero up to the rate-distortion function
  CHECK(lossy_source_exponent(0.3, 0.1, 0.2).value() == doctest::Approx(0.0));
  // infinite beyond 1 - h_b(delta)
  CHECK(lossy_source_exponent(0.3, 0.1, 0.9).is_infinite());
  // delta = 0 reduces to the lossless exponent
  for (double r : {0.5, 0.7, 0.9}) {
    CHECK(lossy_source_exponent(0.1, 0.0, r).value() ==
          doctest::Approx(source_error_exponent(Source({0.1, 0.9}), r).value()).epsilon(1e-12));
  }
  // q < delta: positive jump at rate 0
  CHECK(rate_distortion_binary(0.1, 0.3) == 0.0);
  CHECK(lossy_source_exponent(0.1, 0.3, 1e-9).value() > 0.01);
  // convexity on the finite stretch for q >= delta
  const double lo = rate_distortion_binary(0.3, 0.1);
  const double hi = 1.0 - binary_entropy(0.1);
  for (double r = lo + 0.02; r + 0.02 < hi; r += 0.02) {
    const double second = lossy_source_exponent(0.3, 0.1, r + 0.01).value() -
                          2 * lossy_source_exponent(0.3, 0.1, r).value() +
                          lossy_source_exponent(0.3, 0.1, r - 0.01).value();
    CHECK(second >= -1e-10);
  }
}

TEST_CASE("uniform-source reduction to the channel curves") {
  const double delta = 0.15;
  const LossyReport rep = lossy_bounds(LossyProblem(0.5, bsc(0.1), 1.0, delta));
  JsccSolver s(JsccProblem(Source({0.25, 0.75}), bsc(0.1), 1.0));  // channel machinery only
  const double rate = 1.0 - binary_entropy(delta);
  CHECK(rep.lower == doctest::Approx(s.e_r_at(rate)).epsilon(1e-8));
  CHECK(rep.upper.value() == doctest::Approx(s.e_sp_at(rate).value()).epsilon(1e-8));
  // exact when the reduced rate clears the critical rate
  CHECK((rep.tightness == Tightness::Exact) == (rate >= s.rates().critical_rate - 1e-6));
}

TEST_CASE("delta = 0 reduces to the lossless bounds") {
  const LossyReport rep = lossy_bounds(LossyProblem(0.1, bsc(0.12), 1.0, 0.0));
  JsccSolver s(JsccProblem(Source({0.1, 0.9}), bsc(0.12), 1.0));
  CHECK(rep.lower == doctest::Approx(s.random_coding().value).epsilon(1e-8));
  CHECK(rep.upper.value() == doctest::Approx(s.sphere_packing().value.value()).epsilon(1e-8));
}

TEST_CASE("zero-exponent and unbounded-upper cases") {
  // t R(Q, delta) >= C
  const LossyReport zero = lossy_bounds(LossyProblem(0.45, bsc(0.2), 4.0, 0.01));
  CHECK(zero.tightness == Tightness::ZeroExponent);
  CHECK(*zero.exact_value == 0.0);
  // R_inf > t(1 - h_b(delta)): noiseless channel at tiny t
  const Channel ident(2, 2, {1, 0, 0, 1});
  const LossyReport unb = lossy_bounds(LossyProblem(0.2, ident, 0.5, 0.0));
  CHECK(unb.upper.is_infinite());
}

TEST_CASE("the two lower-bound branches meet continuously") {
  const double q = 0.2;
  const double thr = std::sqrt(q) / (std::sqrt(q) + std::sqrt(1 - q));
  const LossyReport below = lossy_bounds(LossyProblem(q, bsc(0.05), 1.0, thr - 1e-7));
  const LossyReport above = lossy_bounds(LossyProblem(q, bsc(0.05), 1.0, thr + 1e-7));
  CHECK(below.lower_branch == LossyLowerBranch::Hull);
  CHECK(above.lower_branch == LossyLowerBranch::ZeroRateLimit);
  CHECK(std::fabs(below.lower - above.lower) < 1e-6);
}

TEST_CASE("lower bound is nondecreasing in delta") {
  double prev = -1.0;
  for (double d = 0.0; d <= 0.45; d += 0.03) {
    const LossyReport rep = lossy_bounds(LossyProblem(0.15, bsc(0.1), 1.0, d));
    CHECK(rep.lower >= prev - 1e-9);
    prev = rep.lower;
  }
}

TEST_CASE("lossy duality against a primal grid") {
  // tF(R/t) + E_r/E_sp minimized over the shifted rate window
  const LossyProblem p(0.2, bsc(0.1), 1.0, 0.08);
  const LossyReport rep = lossy_bounds(p);
  JsccSolver s(JsccProblem(Source({0.2, 0.8}), bsc(0.1), 1.0));
  double best_r = 1e9, best_sp = 1e9;
  const double top = p.t * (1.0 - binary_entropy(p.delta));
  for (double rate = 1e-4; rate <= top + 1e-12; rate += 1e-4) {
    const ExtReal f = lossy_source_exponent(p.q, p.delta, rate / p.t);
    if (f.is_infinite()) continue;
    best_r = std::min(best_r, p.t * f.value() + s.e_r_at(rate));
    best_sp = std::min(best_sp, p.t * f.value() + s.e_sp_at(rate).value());
  }
  CHECK(rep.lower == doctest::Approx(best_r).epsilon(1e-4));
  CHECK(rep.upper.value() == doctest::Approx(best_sp).epsilon(1e-4));
  // minimizer relations
  CHECK(rep.r_bar_m ==
        doctest::Approx(p.t * (tilted_entropy(Source({0.2, 0.8}), rep.rho_bar) -
                               binary_entropy(p.delta)))
            .epsilon(1e-9));
  CHECK(rep.rho_under == doctest::Approx(std::min(rep.rho_bar, 1.0)).epsilon(1e-6));
}

TEST_CASE("zero-rate-limit branch value") {
  // delta above the branch threshold: lower = tD~(delta||q) + E0(1, W)
  const double q = 0.05, delta = 0.4;
  CHECK(delta > std::sqrt(q) / (std::sqrt(q) + std::sqrt(1 - q)));
  const LossyReport rep = lossy_bounds(LossyProblem(q, bsc(0.1), 1.0, delta));
  CHECK(rep.lower_branch == LossyLowerBranch::ZeroRateLimit);
  JsccSolver s(JsccProblem(Source({q, 1 - q}), bsc(0.1), 1.0));
  CHECK(rep.lower ==
        doctest::Approx(binary_divergence(delta, q) + s.e0_at_one()).epsilon(1e-10));
}

TEST_CASE("lossy problem validation") {
  CHECK_THROWS_AS(LossyProblem(0.6, bsc(0.1), 1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(LossyProblem(0.2, bsc(0.1), 1.0, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(LossyProblem(0.2, bsc(0.1), -1.0, 0.1), std::invalid_argument);
}
