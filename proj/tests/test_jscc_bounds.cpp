#include <doctest.h>

#include <cmath>
#include <random>

#include "jscc/channel_models.hpp"
#include "jscc/jscc_bounds.hpp"

using namespace jscc;

namespace {

JsccProblem bsc_problem(double q, double eps, double t) {
  return JsccProblem(Source({q, 1.0 - q}), bsc(eps), t);
}

}  // namespace

TEST_CASE("zero exponent region") {
  // tH(Q) >= C: BSC(0.2) has capacity ~0.278 < h_b(0.3)
  JsccSolver s(bsc_problem(0.3, 0.2, 1.0));
  CHECK(s.zero_exponent());
  const BoundReport rep = s.classify();
  CHECK(rep.tightness == Tightness::ZeroExponent);
  CHECK(*rep.exact_value == 0.0);
  CHECK(rep.lower_rc == 0.0);
  CHECK(rep.upper_sp.value() == 0.0);
  CHECK(s.random_coding().value == 0.0);
  CHECK(s.sphere_packing().value.value() == 0.0);
}

TEST_CASE("uniform sources are rejected for lossless classification") {
  JsccSolver s(bsc_problem(0.5, 0.1, 1.0));
  CHECK_THROWS_AS(s.classify(), std::invalid_argument);
  CHECK_THROWS_AS(s.symmetric_exact(), std::invalid_argument);
}

TEST_CASE("BSC dual bounds agree with the primal oracle and with each other") {
  JsccSolver s(bsc_problem(0.1, 0.1, 1.0));
  const DualBound rc = s.random_coding();
  const SpBound sp = s.sphere_packing();
  const PrimalResult prc = s.primal_oracle(PrimalKind::RandomCoding);
  const PrimalResult psp = s.primal_oracle(PrimalKind::SpherePacking);
  CHECK(rc.value == doctest::Approx(prc.value).epsilon(1e-4));
  CHECK(sp.value.value() == doctest::Approx(psp.value).epsilon(1e-4));
  // minimizer relations: argmin within two grid steps of t H(Q^{(rho*)})
  CHECK(std::fabs(prc.rate - rc.rate) <= 2.1e-4);
  CHECK(std::fabs(psp.rate - sp.rate) <= 2.1e-4);
  CHECK(prc.rate <= psp.rate + 2.1e-4);  // lower-bound minimizer left of upper-bound minimizer
  // exact case: bounds coincide
  const BoundReport rep = s.classify();
  CHECK(rep.tightness == Tightness::Exact);
  CHECK(std::fabs(rep.upper_sp.value() - rep.lower_rc) <= 1e-8);
  // the tilt/rate equivalences behind the exactness test
  CHECK(rep.t_source_critical_rate >= rep.critical_rate);
  CHECK(rep.rho_bar_star <= 1.0 + 1e-6);
  CHECK(rep.r_bar_m >= rep.critical_rate - 1e-6);
}

TEST_CASE("the maximizer relations of the two dual bounds") {
  // rho_under = min(1, rho_bar); r_under = t H(Q^{(rho_under)})
  for (double eps : {0.02, 0.05, 0.1, 0.2}) {
    for (double t : {0.5, 1.0, 2.0}) {
      JsccSolver s(bsc_problem(0.1, eps, t));
      if (s.zero_exponent()) continue;
      const DualBound rc = s.random_coding();
      const SpBound sp = s.sphere_packing();
      CHECK(rc.rho == doctest::Approx(std::min(1.0, sp.rho)).epsilon(1e-6));
      const double expect_rate = t * tilted_entropy(s.problem().source, rc.rho);
      CHECK(rc.rate == doctest::Approx(expect_rate).epsilon(1e-6));
    }
  }
}

TEST_CASE("gallager bound equals the random-coding bound on symmetric channels") {
  JsccSolver s(bsc_problem(0.1, 0.08, 1.0));
  CHECK(s.gallager() == doctest::Approx(s.random_coding().value).epsilon(1e-8));
  // and in the bracketed regime it matches the simple closed form
  JsccSolver s2(bsc_problem(0.1, 0.002, 0.5));
  const BoundReport rep = s2.classify();
  REQUIRE(rep.tightness == Tightness::Bracketed);
  CHECK(rep.lower_rc == doctest::Approx(s2.e0_at_one() - s2.t_es(1.0)).epsilon(1e-12));
  CHECK(rep.lower_gallager == doctest::Approx(rep.lower_rc).epsilon(1e-8));
  CHECK(rep.rho_under_star == 1.0);
  CHECK(rep.r_under_m == doctest::Approx(rep.t_source_critical_rate));
}

TEST_CASE("bound ordering holds everywhere evaluated") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0.02, 0.45);
  for (int trial = 0; trial < 15; ++trial) {
    const double q = u(rng), eps = u(rng);
    for (double t : {0.5, 1.0}) {
      JsccSolver s(bsc_problem(q, eps, t));
      const BoundReport rep = s.classify();
      if (rep.tightness == Tightness::ZeroExponent) continue;
      CHECK(rep.lower_gallager <= rep.lower_rc + 1e-9);
      CHECK(rep.lower_rc <= rep.upper_sp.value() + 1e-9);
      if (rep.lower_ex) CHECK(*rep.lower_ex <= rep.upper_sp.value() + 1e-9);
    }
  }
}

TEST_CASE("expurgated bound on the BEC") {
  // alpha below the improvement boundary: expurgated beats random coding
  {
    JsccSolver s(JsccProblem(Source({0.1, 0.9}), bec(0.02), 1.0));
    const auto ex = s.expurgated();
    REQUIRE(ex.has_value());
    CHECK(ex->assumption == ExAssumption::VerifiedEquidistant);
    CHECK(ex->value > s.random_coding().value);
    const BoundReport rep = s.classify();
    CHECK(rep.expurgated_applicable);
    CHECK(rep.expurgated_improves);
    // dual equals the expurgated primal oracle
    const PrimalResult pex = s.primal_oracle(PrimalKind::Expurgated);
    CHECK(ex->value == doctest::Approx(pex.value).epsilon(1e-4));
    CHECK(std::fabs(pex.rate - ex->rate) <= 2.1e-4);
  }
  // alpha above the boundary: no improvement, and at rho_x = 1 the bound is
  // E_x(1) - tE_s(1) = E0(1) - tE_s(1)
  {
    JsccSolver s(JsccProblem(Source({0.1, 0.9}), bec(0.2), 1.0));
    const auto ex = s.expurgated();
    REQUIRE(ex.has_value());
    CHECK_FALSE(s.classify().expurgated_improves);
    CHECK(ex->rho == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ex->value == doctest::Approx(s.e0_at_one() - s.t_es(1.0)).epsilon(1e-9));
    CHECK(ex->rate == doctest::Approx(s.t_source_critical_rate()));
  }
  // positive zero-error capacity: no expurgated bound
  {
    JsccSolver s(JsccProblem(Source({0.1, 0.9}), Channel(2, 2, {1, 0, 0, 1}), 0.4));
    CHECK_FALSE(s.expurgated().has_value());
  }
}

TEST_CASE("expurgated improvement boundary sits near alpha = 0.0297") {
  double lo = 0.02, hi = 0.04;
  for (int i = 0; i < 25; ++i) {
    const double mid = 0.5 * (lo + hi);
    JsccSolver s(JsccProblem(Source({0.1, 0.9}), bec(mid), 1.0));
    (s.t_source_critical_rate() < s.rates().expurgated_rate ? lo : hi) = mid;
  }
  CHECK(0.5 * (lo + hi) == doctest::Approx(0.0297).epsilon(0.017));  // +-0.0005 absolute
}

TEST_CASE("symmetric closed-form route matches the dual route") {
  for (double eps : {0.05, 0.08, 0.11}) {
    JsccSolver s(bsc_problem(0.1, eps, 1.0));
    const SymmetricExactResult se = s.symmetric_exact();
    REQUIRE(se.symmetric);
    REQUIRE(se.co1);
    REQUIRE(se.co2);
    const BoundReport rep = s.classify();
    REQUIRE(rep.tightness == Tightness::Exact);
    CHECK(*se.value == doctest::Approx(*rep.exact_value).epsilon(1e-8));
    CHECK(*se.rho == doctest::Approx(rep.rho_bar_star).epsilon(1e-6));
  }
  // co1 failure means a zero exponent
  {
    JsccSolver s(bsc_problem(0.3, 0.2, 1.0));
    const SymmetricExactResult se = s.symmetric_exact();
    CHECK(se.symmetric);
    CHECK_FALSE(se.co1);
    CHECK(*se.value == 0.0);
  }
  // co2 failure: bracketed, value absent, fallback lower bound reported
  {
    JsccSolver s(bsc_problem(0.1, 0.002, 0.5));
    const SymmetricExactResult se = s.symmetric_exact();
    CHECK(se.co1);
    CHECK_FALSE(se.co2);
    CHECK_FALSE(se.value.has_value());
    CHECK(s.classify().tightness == Tightness::Bracketed);
  }
}

TEST_CASE("nonsymmetric duality on the 6x4 channel") {
  JsccSolver s(JsccProblem(Source({0.1, 0.9}), gallager_6x4(0.02), 1.0));
  const DualBound rc = s.random_coding();
  const SpBound sp = s.sphere_packing();
  CHECK(rc.value == doctest::Approx(s.primal_oracle(PrimalKind::RandomCoding).value).epsilon(1e-4));
  CHECK(sp.value.value() ==
        doctest::Approx(s.primal_oracle(PrimalKind::SpherePacking).value).epsilon(1e-4));
  CHECK(rc.value <= sp.value.value() + 1e-9);
  CHECK(s.gallager() <= rc.value + 1e-9);
}

TEST_CASE("csiszar bound strictly improves on gallager inside the bridge window") {
  // at eps near 0.0107-0.0109 the random-coding maximizer falls in the
  // non-concavity bridge and the hull strictly helps
  JsccSolver s(JsccProblem(Source({0.1, 0.9}), gallager_6x4(0.0108), 1.0));
  const double gap = s.random_coding().value - s.gallager();
  CHECK(gap > 1e-5);
  CHECK(gap < 1e-3);
}

TEST_CASE("theorem-style equivalences over a BSC sweep") {
  // sign(tRcr_s - Rcr) matches sign(1 - rho_bar) and the r_bar_m comparison
  for (double eps : {0.003, 0.01, 0.03, 0.1, 0.25}) {
    for (double q : {0.05, 0.2, 0.4}) {
      JsccSolver s(bsc_problem(q, eps, 1.0));
      if (s.zero_exponent()) continue;
      const SpBound sp = s.sphere_packing();
      const double lhs = s.t_source_critical_rate() - s.rates().critical_rate;
      if (std::fabs(lhs) < 1e-6 || std::fabs(sp.rho - 1.0) < 1e-6) continue;  // tolerance band
      CHECK((lhs > 0) == (sp.rho < 1.0));
      CHECK((lhs > 0) == (sp.rate > s.rates().critical_rate - 1e-9));
    }
  }
}

TEST_CASE("report serialization context fields") {
  JsccSolver s(bsc_problem(0.1, 0.1, 0.75));
  const BoundReport rep = s.classify();
  CHECK(rep.capacity == doctest::Approx(1.0 - binary_entropy(0.1)).epsilon(1e-10));
  CHECK(rep.t_entropy == doctest::Approx(0.75 * binary_entropy(0.1)).epsilon(1e-12));
  CHECK(rep.t_log_alphabet == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(rep.t_source_critical_rate == doctest::Approx(0.75 * binary_entropy(0.25)).epsilon(1e-12));
  CHECK(rep.zero_error_capacity_is_zero);
}
