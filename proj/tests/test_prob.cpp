#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jscc/prob.hpp"

using namespace jscc;

TEST_CASE("entropy basics") {
  CHECK(entropy({0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy({1.0}) == doctest::Approx(0.0));
  // independent summation of -sum p log2 p
  const double expected = -(0.1 * std::log2(0.1) + 0.9 * std::log2(0.9));
  CHECK(entropy({0.1, 0.9}) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(expected == doctest::Approx(0.4690).epsilon(1e-4));
  CHECK_THROWS_AS(entropy({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(entropy({1.2, -0.2}), std::invalid_argument);
}

TEST_CASE("kl divergence") {
  CHECK(kl_divergence({0.3, 0.7}, {0.3, 0.7}).value() == doctest::Approx(0.0));
  CHECK(kl_divergence({1.0, 0.0}, {0.5, 0.5}).value() == doctest::Approx(1.0));
  const double direct = 0.25 * std::log2(0.25 / 0.1) + 0.75 * std::log2(0.75 / 0.9);
  CHECK(kl_divergence({0.25, 0.75}, {0.1, 0.9}).value() == doctest::Approx(direct).epsilon(1e-13));
  CHECK(kl_divergence({0.5, 0.5}, {1.0, 0.0}).is_infinite());
  CHECK_THROWS_AS(kl_divergence({0.5, 0.5}, {1.0}), std::invalid_argument);
}

TEST_CASE("tilted source") {
  const Source q({0.1, 0.9});
  CHECK(tilted_source(q, 0.0).probs[0] == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(tilted_source(q, ExtReal::infinity()).probs[0] == doctest::Approx(0.5));
  // rho = 1: sqrt(0.1)/(sqrt(0.1)+sqrt(0.9)) = 1/4 exactly
  CHECK(tilted_source(q, 1.0).probs[0] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(tilted_source(q, 1.0).probs[1] == doctest::Approx(0.75).epsilon(1e-13));
  CHECK_THROWS_AS(tilted_source(q, -0.5), std::invalid_argument);
}

TEST_CASE("tilted entropy root") {
  const Source q({0.1, 0.9});
  CHECK(tilted_entropy_root(q, entropy(q.probs)).value() == doctest::Approx(0.0));
  CHECK(tilted_entropy_root(q, 1.0).is_infinite());
  const double r = binary_entropy(0.25);
  CHECK(tilted_entropy_root(q, r).value() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(tilted_entropy_root(q, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(tilted_entropy_root(q, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(tilted_entropy_root(Source({0.5, 0.5}), 1.0), std::invalid_argument);
}

TEST_CASE("tilted entropy monotone in rho and root inverts it") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.02, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(3);
    double sum = 0.0;
    for (double& v : p) sum += v = u(rng);
    for (double& v : p) v /= sum;
    const Source q(p);
    if (q.is_uniform(1e-6)) continue;
    const double r1 = u(rng) * 3.0, r2 = r1 + u(rng);
    CHECK(tilted_entropy(q, r1) < tilted_entropy(q, r2));

    const double h = entropy(q.probs);
    const double top = log2_size(q.alphabet_size());
    const double rate = h + (top - h) * 0.9 * u(rng);
    const ExtReal rho = tilted_entropy_root(q, rate);
    REQUIRE(rho.is_finite());
    CHECK(tilted_entropy(q, rho.value()) == doctest::Approx(rate).epsilon(1e-10));
  }
}

TEST_CASE("binary entropy and divergence") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == doctest::Approx(0.0));
  CHECK(binary_divergence(0.3, 0.3) == doctest::Approx(0.0));
  const double direct = 0.3 * std::log2(0.3 / 0.1) + 0.7 * std::log2(0.7 / 0.9);
  CHECK(binary_divergence(0.3, 0.1) == doctest::Approx(direct).epsilon(1e-13));
  CHECK_THROWS_AS(binary_divergence(1.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(binary_divergence(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("source and channel validation names the offending entry") {
  CHECK_THROWS_WITH_AS(Source({0.5, 0.0, 0.5}), doctest::Contains("probs[1]"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Channel::from_rows({{0.5, 0.5}, {0.7, 0.2}}), doctest::Contains("matrix[1]"),
                       std::invalid_argument);
  CHECK_THROWS_AS(Channel::from_rows({{0.5, 0.5}, {0.7, 0.2, 0.1}}), std::invalid_argument);
}

TEST_CASE("geometric mean") {
  CHECK(geometric_mean({0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(geometric_mean({0.1, 0.9}) == doctest::Approx(std::sqrt(0.09)).epsilon(1e-13));
}
