#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "wpr/beamforming.hpp"
#include "wpr/model.hpp"
#include "wpr/simulator.hpp"
#include "wpr/timesplit.hpp"

using namespace wpr;
using wpr::testing::fig3_config;
using wpr::testing::unit_gain_channels;
using Vec = ComplexVector<double>;

TEST_CASE("run_trial") {
  SUBCASE("optimal scheme dominates per trial") {
    const auto cfg = fig3_config(10);
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
      const auto t = run_trial(cfg, seed);
      REQUIRE(t.rate_opt >= t.rate_bench - 1e-12);
      REQUIRE(t.z_m_opt >= t.z_m_bench * (1 - 1e-12));
      REQUIRE(t.rate_bench >= 0);
      REQUIRE(t.rate_direct >= 0);
      REQUIRE(t.tau_opt > 0);
      REQUIRE(t.tau_opt < 1);
    }
  }
  SUBCASE("single antenna leaves no room for beamforming") {
    const auto cfg = fig3_config(1);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto t = run_trial(cfg, seed);
      REQUIRE(t.rate_opt == doctest::Approx(t.rate_bench).epsilon(1e-12));
    }
  }
  SUBCASE("deterministic in (cfg, seed)") {
    const auto cfg = fig3_config(6);
    CHECK(run_trial(cfg, 77) == run_trial(cfg, 77));
    CHECK_FALSE(run_trial(cfg, 77) == run_trial(cfg, 78));
  }
  SUBCASE("rate equals the dual-hop throughput at the chosen w and tau") {
    const auto cfg = fig3_config(5);
    const auto ch = sample_channels(cfg, 31);
    const auto t = run_trial(cfg, 31);
    const auto sol = optimal_beamformer(effective_channels(cfg, ch));
    const double gamma = end_to_end_snr(cfg, ch, sol.w, t.tau_opt);
    CHECK(t.rate_opt == doctest::Approx(throughput(gamma, t.tau_opt)).epsilon(1e-12));
  }
  SUBCASE("degenerate draws are redrawn and finally reported") {
    auto cfg = fig3_config(2);
    cfg.d1 = 1e200;  // path loss overflows, heff1 underflows to zero
    CHECK_THROWS_AS(run_trial(cfg, 1), DegenerateChannelError);
  }
}

TEST_CASE("direct_rate") {
  auto cfg = with_direct_distance(fig3_config(4));
  CHECK(*cfg.d_sd == 10.0);
  auto ch = sample_channels(cfg, 5);

  const double z = ch.h1.squaredNorm() * std::norm(*ch.f0) / std::pow(cfg.d1 * 10.0, cfg.alpha);
  const double beta = cfg.eta * cfg.p / cfg.n0 * z;
  const double tau = optimal_tau(beta).tau_hat;
  const double expected = (1 - tau) * std::log2(1 + tau / (1 - tau) * beta);
  CHECK(direct_rate(cfg, ch) == doctest::Approx(expected).epsilon(1e-12));

  ch.f0 = 0.0;
  CHECK(direct_rate(cfg, ch) == 0.0);

  ch.f0.reset();
  CHECK_THROWS_AS(direct_rate(cfg, ch), ConfigError);
  auto no_dsd = fig3_config(4);
  CHECK_THROWS_AS(direct_rate(no_dsd, sample_channels(no_dsd, 5)), ConfigError);
}

TEST_CASE("relay and direct share the argmax at equal beta") {
  for (double beta : {0.3, 12.0, 5e4}) {
    CHECK(oracle_tau_search(beta, 10'000).tau == doctest::Approx(optimal_tau(beta, 1.0).tau_hat).epsilon(1e-4));
  }
}

TEST_CASE("relaying beats direct at moderate SNR, loses at high SNR") {
  SweepSpec spec{SweepVariable::snr, {20.0, 60.0}, 1000, 42};
  const auto table = sweep(spec, fig3_config(10));
  CHECK(table.points[0].mean.rate_opt > table.points[0].mean.rate_direct);
  CHECK(table.points[1].mean.rate_opt < table.points[1].mean.rate_direct);
}

TEST_CASE("placement with deterministic unit channels favors the asymmetric point") {
  Vec h1(10), h2(10);
  h1.setZero();
  h2.setZero();
  h1[0] = 1;
  h2[1] = 1;
  const auto ch = unit_gain_channels(h1, h2);
  SweepSpec spec{SweepVariable::placement_grid, {}, 1, 0};
  auto base = fig3_config(10, 1e6);
  const auto asym = evaluate_trial(sweep_config(spec, base, 7, 13), ch);
  const auto sym = evaluate_trial(sweep_config(spec, base, 10, 10), ch);
  CHECK(asym.rate_opt > sym.rate_opt);
  CHECK_THROWS_AS(sweep_config(spec, base, 20, 10), ConfigError);
}

TEST_CASE("sweep") {
  const auto base = fig3_config(4);
  SUBCASE("single-trial sweep equals run_trial") {
    SweepSpec spec{SweepVariable::antenna_count, {3.0}, 1, 9};
    const auto table = sweep(spec, base);
    auto cfg = base;
    cfg.n = 3;
    const auto t = run_trial(cfg, 9);
    REQUIRE(table.points.size() == 1);
    CHECK(table.points[0].mean.rate_opt == t.rate_opt);
    CHECK(table.points[0].mean.rate_bench == t.rate_bench);
    CHECK(table.points[0].mean.rate_direct == t.rate_direct);
  }
  SUBCASE("mean rate grows with the array size") {
    SweepSpec spec{SweepVariable::antenna_count, {2, 8, 32}, 1000, 42};
    const auto table = sweep(spec, base);
    CHECK(table.points[0].mean.rate_opt < table.points[1].mean.rate_opt);
    CHECK(table.points[1].mean.rate_opt < table.points[2].mean.rate_opt);
  }
  SUBCASE("placement grid cardinality and order") {
    SweepSpec spec{SweepVariable::placement_grid, default_placement_values(), 2, 1};
    const auto table = sweep(spec, base);
    REQUIRE(table.points.size() == 49);
    CHECK(table.points[0].value == 7);
    CHECK(table.points[0].value2 == 7);
    CHECK(table.points[1].value2 == 8);
    CHECK(table.points[48].value == 13);
  }
  SUBCASE("results do not depend on the thread count") {
    SweepSpec spec{SweepVariable::antenna_count, {2, 16}, 300, 5};
    const auto one = sweep(spec, base, 1);
    const auto four = sweep(spec, base, 4);
    for (std::size_t i = 0; i < one.points.size(); ++i) {
      CHECK(one.points[i].mean == four.points[i].mean);
      CHECK(one.points[i].z_ratio_mean == four.points[i].z_ratio_mean);
    }
  }
  SUBCASE("invalid specs") {
    CHECK_THROWS_AS(sweep(SweepSpec{SweepVariable::snr, {}, 10, 0}, base), ConfigError);
    CHECK_THROWS_AS(sweep(SweepSpec{SweepVariable::antenna_count, {2.5}, 10, 0}, base), ConfigError);
    CHECK_THROWS_AS(sweep(SweepSpec{SweepVariable::antenna_count, {2}, 0, 0}, base), ConfigError);
  }
}
