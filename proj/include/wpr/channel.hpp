#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "wpr/system_config.hpp"

namespace wpr {

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// One draw of every random channel in the scenario.
template <typename Scalar>
struct ChannelRealization {
  ComplexVector<Scalar> h1;  // PB -> S
  ComplexVector<Scalar> h2;  // PB -> R
  std::complex<Scalar> f1;   // S -> R
  std::complex<Scalar> f2;   // R -> D
  std::optional<std::complex<Scalar>> f0;  // S -> D

  Eigen::Index size() const { return h1.size(); }
};

using ChannelRealizationd = ChannelRealization<double>;

namespace detail {

// SplitMix64 finalizer; decorrelates consecutive seeds before they reach the
// Mersenne Twister state.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Unit-variance circularly-symmetric complex Gaussian source. Box-Muller over
/// 53-bit uniforms so the stream is identical on every standard library.
class ComplexGaussian {
 public:
  explicit ComplexGaussian(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::complex<double> operator()() {
    // u1 in (0,1], u2 in [0,1)
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-std::log(u1));  // E|z|^2 = 1
    const double phase = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phase), r * std::sin(phase)};
  }

  std::complex<double> nonzero() {
    for (;;) {
      const auto z = (*this)();
      if (z != 0.0) return z;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// Draws h1, h2, f1, f2, f0 i.i.d. CN(0,1). Identical (n, seed) give
/// bit-identical output. Zero scalars and all-zero vectors are redrawn.
template <typename Scalar>
ChannelRealization<Scalar> sample_channels(const SystemConfig<Scalar>& cfg, std::uint64_t seed) {
  validate(cfg);
  detail::ComplexGaussian draw(seed);
  const Eigen::Index n = cfg.n;
  auto draw_vector = [&] {
    ComplexVector<Scalar> v(n);
    do {
      for (Eigen::Index i = 0; i < n; ++i) v[i] = std::complex<Scalar>(draw());
    } while (v.squaredNorm() == Scalar(0));
    return v;
  };
  ChannelRealization<Scalar> ch;
  ch.h1 = draw_vector();
  ch.h2 = draw_vector();
  ch.f1 = std::complex<Scalar>(draw.nonzero());
  ch.f2 = std::complex<Scalar>(draw.nonzero());
  ch.f0 = std::complex<Scalar>(draw.nonzero());
  return ch;
}

}  // namespace wpr
