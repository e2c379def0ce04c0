#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "wpr/error.hpp"

namespace wpr {

/// Deterministic scenario parameters of the power-beacon-assisted relay link.
///
/// Powers are linear watts and distances meters. The block time is fixed to 1
/// since every rate and SNR is invariant to it.
template <typename Scalar>
struct SystemConfig {
  Scalar p{};                  // beacon transmit power
  Scalar n0{};                 // noise variance
  Scalar eta{Scalar(0.4)};     // energy conversion efficiency, (0,1)
  Scalar alpha{Scalar(3)};     // path-loss exponent
  std::uint32_t n{};           // beacon antenna count
  Scalar d1{}, d2{}, d3{}, d4{};  // PB->S, PB->R, S->R, R->D
  std::optional<Scalar> d_sd;  // S->D, direct baseline only

  /// Path-loss product of the source branch, (d1 d3)^alpha.
  Scalar source_loss() const { return std::pow(d1 * d3, alpha); }
  /// Path-loss product of the relay branch, (d2 d4)^alpha.
  Scalar relay_loss() const { return std::pow(d2 * d4, alpha); }

  bool operator==(const SystemConfig&) const = default;
};

using SystemConfigd = SystemConfig<double>;

/// Throws ConfigError naming the first violated invariant.
template <typename Scalar>
void validate(const SystemConfig<Scalar>& cfg) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(std::isfinite(cfg.p) && cfg.p > 0, "p must be a finite value > 0");
  require(std::isfinite(cfg.n0) && cfg.n0 > 0, "n0 must be a finite value > 0");
  require(cfg.eta > 0 && cfg.eta < 1, "eta must lie in (0,1)");
  require(std::isfinite(cfg.alpha) && cfg.alpha > 0, "alpha must be a finite value > 0");
  require(cfg.n >= 1, "n must be >= 1");
  for (Scalar d : {cfg.d1, cfg.d2, cfg.d3, cfg.d4})
    require(std::isfinite(d) && d > 0, "distances d1..d4 must be finite and > 0");
  if (cfg.d_sd) require(std::isfinite(*cfg.d_sd) && *cfg.d_sd > 0, "d_sd must be finite and > 0");
}

}  // namespace wpr
