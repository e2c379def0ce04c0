#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "wpr/lambert_w.hpp"
#include "wpr/timesplit.hpp"

using namespace wpr;

namespace {

// Fixed point of w = e^{-w} is W(1); contraction factor ~0.57.
double omega_constant_by_iteration() {
  double w = 0.5;
  for (int i = 0; i < 200; ++i) w = std::exp(-w);
  return w;
}

}  // namespace

TEST_CASE("lambert_w0 reference values") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(std::abs(lambert_w0(std::numbers::e) - 1.0) <= 1e-12);
  const double omega = omega_constant_by_iteration();
  CHECK(omega == doctest::Approx(0.5671432904097838).epsilon(1e-15));
  CHECK(lambert_w0(1.0) == doctest::Approx(omega).epsilon(1e-14));
  CHECK(lambert_w0(-1 / std::numbers::e) == -1.0);
  // W(-ln2 / 2) = -ln 2.
  CHECK(lambert_w0(-std::numbers::ln2 / 2) == doctest::Approx(-std::numbers::ln2).epsilon(1e-13));
  CHECK(lambert_w0(1.0f) == doctest::Approx(0.567143f).epsilon(1e-6));
}

TEST_CASE("lambert_w0 domain") {
  CHECK_THROWS_AS(lambert_w0(-0.4), DomainError);
  CHECK_THROWS_AS(lambert_w0(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("lambert_w0 satisfies w e^w = x across its domain") {
  const double lo = -1 / std::numbers::e + 1e-6;
  const int points = 20'000;
  for (int i = 0; i < points; ++i) {
    // Half of the points hug the branch point, the rest are log spaced to 1e8.
    const double x = i < points / 2 ? lo + (0.5 - lo) * i / (points / 2 - 1)
                                    : std::pow(10.0, -3 + 11.0 * (i - points / 2) / (points / 2 - 1));
    const double w = lambert_w0(x);
    REQUIRE(w >= -1);
    REQUIRE(std::abs(w * std::exp(w) - x) <= 1e-10 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("throughput_g") {
  for (double tau : {0.1, 0.5, 0.9}) CHECK(throughput_g(tau, 0.0, 2.0, 0.5) == 0.0);
  CHECK(throughput_g(0.5, 3.0, 1.0, 0.5) == doctest::Approx(0.5));
  double previous = 0;
  for (double z = 0.1; z < 100; z *= 1.7) {
    const double g = throughput_g(0.3, z, 4.0, 0.5);
    CHECK(g > previous);
    previous = g;
  }
  CHECK_THROWS_AS(throughput_g(0.0, 1.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(throughput_g(0.5, -1.0, 1.0, 0.5), DomainError);
}

TEST_CASE("optimal_tau forced values") {
  const double e = std::numbers::e;
  CHECK(std::abs(optimal_tau(1.0).tau_hat - (e - 1) / e) <= 1e-12);
  CHECK(std::abs(optimal_tau(e * e + 1).tau_hat - (e * e - 1) / (2 * e * e)) <= 1e-12);
  CHECK(optimal_tau(1.0).tau_hat == doctest::Approx(0.6321206).epsilon(1e-7));
  CHECK(optimal_tau(e * e + 1).tau_hat == doctest::Approx(0.4323324).epsilon(1e-7));
  CHECK_THROWS_AS(optimal_tau(0.0), DomainError);
  CHECK_THROWS_AS(optimal_tau(-2.0), DomainError);
}

TEST_CASE("optimal_tau agrees with the golden-section oracle") {
  CHECK(oracle_tau_search(1.0, 10'000).tau == doctest::Approx(0.63212).epsilon(1e-4));
  CHECK(std::abs(oracle_tau_search(100.0, 10'000).tau - optimal_tau(100.0).tau_hat) <= 1e-4);
  double previous = 1;
  for (int i = 0; i < 200; ++i) {
    const double beta = std::pow(10.0, -3 + 9.0 * i / 199);
    const auto closed = optimal_tau(beta);
    const auto oracle = oracle_tau_search(beta, 10'000);
    CAPTURE(beta);
    REQUIRE(std::abs(closed.tau_hat - oracle.tau) <= 1e-4);
    REQUIRE(oracle.local_maxima == 1);
    REQUIRE(closed.tau_hat > 0);
    REQUIRE(closed.tau_hat < 1);
    REQUIRE(closed.tau_hat < previous);
    previous = closed.tau_hat;
  }
  CHECK_THROWS_AS(oracle_tau_search(1.0, 100), DomainError);
}

TEST_CASE("optimal_tau beats sampled time splits") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-9, 1 - 1e-9);
  for (double beta : {1e-3, 0.2, 1.0, 7.0, 50.0, 1e3, 1e6}) {
    const auto s = optimal_tau(beta);
    CHECK(s.rate == doctest::Approx(throughput_g(s.tau_hat, 1.0, beta, 0.5)).epsilon(1e-15));
    for (int k = 0; k < 1000; ++k) REQUIRE(s.rate >= throughput_g(u(rng), 1.0, beta, 0.5) - 1e-12);
  }
}

TEST_CASE("argmax does not depend on the pre-log factor") {
  for (double beta : {0.05, 3.0, 400.0}) {
    const auto half = optimal_tau(beta, 0.5);
    const auto full = optimal_tau(beta, 1.0);
    CHECK(half.tau_hat == full.tau_hat);
    CHECK(full.rate == doctest::Approx(2 * half.rate));
  }
}
