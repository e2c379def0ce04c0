#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "wpr/channel.hpp"
#include "wpr/system_config.hpp"

namespace wpr::testing {

/// Unit distances, unit powers; handy when a test wants heff == h.
inline SystemConfigd unit_config(std::uint32_t n) {
  SystemConfigd cfg;
  cfg.p = 1;
  cfg.n0 = 1;
  cfg.eta = 0.5;
  cfg.alpha = 3;
  cfg.n = n;
  cfg.d1 = cfg.d2 = cfg.d3 = cfg.d4 = 1;
  return cfg;
}

/// Fig. 3 geometry: d1 = d2 = 3 m, d3 = d4 = 5 m.
inline SystemConfigd fig3_config(std::uint32_t n, double p = 1e4) {
  SystemConfigd cfg;
  cfg.p = p;
  cfg.n0 = 1;
  cfg.eta = 0.4;
  cfg.alpha = 3;
  cfg.n = n;
  cfg.d1 = cfg.d2 = 3;
  cfg.d3 = cfg.d4 = 5;
  return cfg;
}

inline ChannelRealizationd unit_gain_channels(ComplexVector<double> h1, ComplexVector<double> h2) {
  ChannelRealizationd ch;
  ch.h1 = std::move(h1);
  ch.h2 = std::move(h2);
  ch.f1 = ch.f2 = 1.0;
  ch.f0 = 1.0;
  return ch;
}

/// Random scenario with distances in [1, 20] m and N in [1, 16].
inline SystemConfigd random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(1.0, 20.0);
  std::uniform_int_distribution<std::uint32_t> ant(1, 16);
  SystemConfigd cfg = fig3_config(ant(rng));
  cfg.d1 = dist(rng);
  cfg.d2 = dist(rng);
  cfg.d3 = dist(rng);
  cfg.d4 = dist(rng);
  cfg.alpha = std::uniform_real_distribution<double>(2.0, 4.0)(rng);
  return cfg;
}

}  // namespace wpr::testing
