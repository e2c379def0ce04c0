#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include <Eigen/Dense>

#include "wpr/channel.hpp"
#include "wpr/error.hpp"
#include "wpr/system_config.hpp"

namespace wpr {

/// Branch channels scaled by their information-hop gain and path losses, with
/// the projection geometry of heff1 against span(heff2).
template <typename Scalar>
struct EffectiveChannels {
  ComplexVector<Scalar> heff1;
  ComplexVector<Scalar> heff2;
  Scalar a{};  // ||P heff1||, P the projector onto span(heff2)
  Scalar b{};  // ||(I - P) heff1||
  Scalar c{};  // ||heff2||
};

using EffectiveChannelsd = EffectiveChannels<double>;

/// |w^T h|^2, the power gain a beamformer w delivers over channel h.
template <typename DerivedW, typename DerivedH>
auto transmit_gain(const Eigen::MatrixBase<DerivedW>& w, const Eigen::MatrixBase<DerivedH>& h) {
  return std::norm((w.transpose() * h).value());
}

/// min(|w^T heff1|^2, |w^T heff2|^2), the quantity the beamformer maximizes.
template <typename Scalar, typename Derived>
Scalar min_gain(const EffectiveChannels<Scalar>& eff, const Eigen::MatrixBase<Derived>& w) {
  return std::min<Scalar>(transmit_gain(w, eff.heff1), transmit_gain(w, eff.heff2));
}

template <typename Scalar>
EffectiveChannels<Scalar> effective_channels(const SystemConfig<Scalar>& cfg,
                                             const ChannelRealization<Scalar>& ch) {
  if (ch.h1.size() != Eigen::Index(cfg.n) || ch.h2.size() != Eigen::Index(cfg.n))
    throw DomainError("channel vectors do not match antenna count");
  EffectiveChannels<Scalar> eff;
  eff.heff1 = (std::abs(ch.f1) / std::sqrt(cfg.source_loss())) * ch.h1;
  eff.heff2 = (std::abs(ch.f2) / std::sqrt(cfg.relay_loss())) * ch.h2;

  const Scalar n1 = eff.heff1.norm();
  const Scalar n2 = eff.heff2.norm();
  if (!(n1 > 0) || !(n2 > 0)) throw DegenerateChannelError("effective channel has zero norm");

  // heff2^H heff1 / ||heff2||^2 is the coordinate of heff1 along heff2.
  const std::complex<Scalar> coord = eff.heff2.dot(eff.heff1) / (n2 * n2);
  eff.a = std::abs(coord) * n2;
  eff.b = (eff.heff1 - coord * eff.heff2).norm();
  // |heff1^H P heff2| / ||P heff1|| reduces to ||heff2|| for a > 0; the same
  // value is the continuous extension at a = 0.
  eff.c = n2;
  return eff;
}

namespace detail {

template <typename Scalar>
void require_tau(Scalar tau) {
  if (!(tau > 0 && tau < 1)) throw DomainError("tau must lie in (0,1)");
}

template <typename Derived>
void require_unit(const Eigen::MatrixBase<Derived>& w) {
  using std::abs;
  if (!(abs(w.squaredNorm() - 1) <= 1e-9)) throw DomainError("beamformer must have unit norm");
}

}  // namespace detail

/// Energy harvested by (source, relay) over the harvesting fraction tau.
template <typename Scalar, typename Derived>
std::pair<Scalar, Scalar> harvested_energy(const SystemConfig<Scalar>& cfg,
                                           const ChannelRealization<Scalar>& ch,
                                           const Eigen::MatrixBase<Derived>& w, Scalar tau) {
  detail::require_unit(w);
  detail::require_tau(tau);
  const Scalar scale = cfg.eta * cfg.p * tau;
  return {scale * transmit_gain(w, ch.h1) / std::pow(cfg.d1, cfg.alpha),
          scale * transmit_gain(w, ch.h2) / std::pow(cfg.d2, cfg.alpha)};
}

/// Decode-and-forward end-to-end SNR: the weaker of the two hop SNRs, each hop
/// spending its harvested energy over half of the remaining (1 - tau) block.
template <typename Scalar, typename Derived>
Scalar end_to_end_snr(const SystemConfig<Scalar>& cfg, const ChannelRealization<Scalar>& ch,
                      const Eigen::MatrixBase<Derived>& w, Scalar tau) {
  detail::require_unit(w);
  detail::require_tau(tau);
  const Scalar branch1 = transmit_gain(w, ch.h1) * std::norm(ch.f1) / cfg.source_loss();
  const Scalar branch2 = transmit_gain(w, ch.h2) * std::norm(ch.f2) / cfg.relay_loss();
  return 2 * tau * cfg.eta * cfg.p / ((1 - tau) * cfg.n0) * std::min(branch1, branch2);
}

/// Achievable dual-hop rate in bits/s/Hz.
template <typename Scalar>
Scalar throughput(Scalar gamma, Scalar tau) {
  detail::require_tau(tau);
  if (!(gamma >= 0)) throw DomainError("SNR must be >= 0");
  return (1 - tau) / 2 * std::log1p(gamma) / std::numbers::ln2_v<Scalar>;
}

}  // namespace wpr
