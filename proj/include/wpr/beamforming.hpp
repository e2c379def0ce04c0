#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wpr/channel.hpp"
#include "wpr/error.hpp"
#include "wpr/model.hpp"

namespace wpr {

/// Which branch of the max-min geometry of g(x) = min(a x + b sqrt(1-x^2), c x)
/// holds the optimum.
enum class BeamCase {
  cross_before_peak,  // c >= (a^2+b^2)/a: optimum at the peak of g1
  cross_after_peak,   // a <= c < (a^2+b^2)/a: optimum at g1 = g2
  no_cross,           // c < a: g2 lies below g1 everywhere, x = 1
};

constexpr std::string_view to_string(BeamCase c) {
  switch (c) {
    case BeamCase::cross_before_peak: return "CROSS_BEFORE_PEAK";
    case BeamCase::cross_after_peak: return "CROSS_AFTER_PEAK";
    case BeamCase::no_cross: return "NO_CROSS";
  }
  return "UNKNOWN";
}

template <typename Scalar>
struct BeamformerSolution {
  ComplexVector<Scalar> w;          // unit norm
  Scalar x_bar{};                   // |w^T heff2| / ||heff2||, in [0,1]
  std::optional<BeamCase> case_id;  // empty for heuristic beamformers
  Scalar z_m{};                     // min(|w^T heff1|^2, |w^T heff2|^2)
};

using BeamformerSolutiond = BeamformerSolution<double>;

template <typename Scalar>
struct CombiningWeight {
  Scalar x_bar{};
  Scalar complement{};  // sqrt(1 - x_bar^2), computed without cancellation
  BeamCase case_id{};
};

/// Maximizer of min(a x + b sqrt(1-x^2), c x) over x in [0,1].
template <typename Scalar>
CombiningWeight<Scalar> combining_weight(Scalar a, Scalar b, Scalar c) {
  if (!(a >= 0 && b >= 0 && c >= 0)) throw DomainError("a, b, c must be >= 0");
  if (!(a + b > 0)) throw DomainError("a + b must be > 0");
  const Scalar r2 = a * a + b * b;
  // c a >= a^2 + b^2 is the threshold test with +inf at a = 0 folded in.
  if (c * a >= r2) {
    const Scalar r = std::sqrt(r2);
    return {a / r, b / r, BeamCase::cross_before_peak};
  }
  if (c >= a) {
    const Scalar r = std::hypot(a - c, b);
    return {b / r, (c - a) / r, BeamCase::cross_after_peak};
  }
  return {Scalar(1), Scalar(0), BeamCase::no_cross};
}

template <typename Scalar>
std::pair<Scalar, BeamCase> optimal_x(Scalar a, Scalar b, Scalar c) {
  const auto cw = combining_weight(a, b, c);
  return {cw.x_bar, cw.case_id};
}

namespace detail {

template <typename Scalar>
void require_nonzero(const EffectiveChannels<Scalar>& eff) {
  if (eff.heff1.size() == 0 || eff.heff1.size() != eff.heff2.size())
    throw DomainError("effective channels must be nonempty and of equal length");
  if (!(eff.heff1.squaredNorm() > 0) || !(eff.heff2.squaredNorm() > 0))
    throw DegenerateChannelError("effective channel has zero norm");
}

}  // namespace detail

/// Closed-form max-min energy beamformer for the two effective channels.
///
/// w = x conj(e2) + sqrt(1-x^2) e^{i arg(e2^H heff1)} conj(r)/||r||, with e2 the
/// unit vector along heff2 and r the residual of heff1 after projecting onto
/// e2. This is the projection-basis form up to a global phase, chosen so that
/// w^T heff2 is real and nonnegative. When heff1 is orthogonal to heff2 the
/// parallel direction falls back to conj(e2); when it is collinear the
/// residual term has zero weight and is dropped.
template <typename Scalar>
BeamformerSolution<Scalar> optimal_beamformer(const EffectiveChannels<Scalar>& eff) {
  detail::require_nonzero(eff);
  using Complex = std::complex<Scalar>;
  const Scalar c = eff.heff2.norm();
  const ComplexVector<Scalar> e2 = eff.heff2 / c;
  const Complex coord = e2.dot(eff.heff1);
  ComplexVector<Scalar> residual = eff.heff1 - coord * e2;
  residual -= e2.dot(residual) * e2;
  const Scalar b = residual.norm();

  const auto cw = combining_weight(eff.a, eff.b, eff.c);
  BeamformerSolution<Scalar> sol;
  sol.w = cw.x_bar * e2.conjugate();
  if (cw.complement > 0 && b > 0) {
    const Scalar m = std::abs(coord);
    const Complex phase = m > 0 ? coord / m : Complex(1);
    sol.w += (cw.complement * phase / b) * residual.conjugate();
  }
  sol.x_bar = cw.x_bar;
  sol.case_id = cw.case_id;
  const Scalar g1 = eff.a * cw.x_bar + eff.b * cw.complement;
  const Scalar g2 = eff.c * cw.x_bar;
  sol.z_m = std::min(g1 * g1, g2 * g2);
  return sol;
}

/// Large-array heuristic: matched filters to h1 and h2 weighted by the
/// opposite hop's amplitude gain. The combination is renormalized to unit
/// norm, which the nominal normalizer only achieves for orthogonal h1, h2.
template <typename Scalar>
BeamformerSolution<Scalar> benchmark_beamformer(const EffectiveChannels<Scalar>& eff,
                                                const ChannelRealization<Scalar>& raw,
                                                const SystemConfig<Scalar>& cfg) {
  detail::require_nonzero(eff);
  const Scalar n1 = raw.h1.norm();
  const Scalar n2 = raw.h2.norm();
  if (!(n1 > 0) || !(n2 > 0)) throw DegenerateChannelError("beacon channel has zero norm");
  const Scalar s1 = std::abs(raw.f1) / std::sqrt(cfg.source_loss());
  const Scalar s2 = std::abs(raw.f2) / std::sqrt(cfg.relay_loss());

  ComplexVector<Scalar> w =
      ((s2 / n1) * raw.h1.conjugate() + (s1 / n2) * raw.h2.conjugate()) / std::hypot(s1, s2);
  const Scalar norm = w.norm();
  if (!(norm > 0)) throw DegenerateChannelError("benchmark beamformer vanished");
  w /= norm;

  BeamformerSolution<Scalar> sol;
  sol.x_bar = std::min<Scalar>(std::sqrt(transmit_gain(w, eff.heff2)) / eff.heff2.norm(), 1);
  sol.z_m = min_gain(eff, w);
  sol.w = std::move(w);
  return sol;
}

struct OracleSearch {
  double z_best{};               // best min-gain on the subspace grid
  ComplexVector<double> w_best;  // its beamformer
  double z_random_best{};        // best min-gain over random full-space vectors
  std::size_t random_samples{};

  bool random_exceeds(double slack = 0) const { return z_random_best > z_best + slack; }
};

/// Exhaustive search for the max-min beamformer. Scans
/// w = cos(t) u1 + sin(t) e^{ip} u2 over t in [0, pi/2] (grid_theta points,
/// endpoints included) and p in [0, 2 pi) (grid_phi points), where (u1, u2) is
/// a Householder-QR orthonormal basis of span(conj heff1, conj heff2). Also
/// draws `random_samples` uniformly distributed unit vectors in C^N.
inline OracleSearch oracle_beamformer_search(const EffectiveChannelsd& eff, int grid_theta,
                                             int grid_phi, std::size_t random_samples = 1000,
                                             std::uint64_t seed = 0) {
  detail::require_nonzero(eff);
  if (grid_theta < 64 || grid_phi < 64) throw DomainError("oracle grids must be >= 64");
  using Complex = std::complex<double>;
  const Eigen::Index n = eff.heff1.size();

  Eigen::MatrixXcd span(n, 2);
  span.col(0) = eff.heff1.conjugate();
  span.col(1) = eff.heff2.conjugate();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(span);
  const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, std::min<Eigen::Index>(n, 2));
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  const bool rank_two = n >= 2 && std::abs(r(1, 1)) > 1e-14 * std::abs(r(0, 0)) + 1e-300;

  const ComplexVector<double> u1 = q.col(0);
  const ComplexVector<double> u2 = rank_two ? ComplexVector<double>(q.col(1))
                                            : ComplexVector<double>::Zero(n);
  const Complex p1 = (u1.transpose() * eff.heff1).value();
  const Complex q1 = (u1.transpose() * eff.heff2).value();
  const Complex p2 = (u2.transpose() * eff.heff1).value();
  const Complex q2 = (u2.transpose() * eff.heff2).value();

  // Rotated second-basis coordinates, split into re/im for a tight inner loop.
  std::vector<double> p2r(grid_phi), p2i(grid_phi), q2r(grid_phi), q2i(grid_phi);
  for (int j = 0; j < grid_phi; ++j) {
    const Complex rot = std::polar(1.0, 2 * std::numbers::pi * j / grid_phi);
    const Complex pr = rot * p2, qr2 = rot * q2;
    p2r[j] = pr.real(), p2i[j] = pr.imag(), q2r[j] = qr2.real(), q2i[j] = qr2.imag();
  }

  OracleSearch out;
  out.z_best = -1;
  int best_i = 0, best_j = 0;
  const int rows = rank_two ? grid_theta : 1;
  for (int i = 0; i < rows; ++i) {
    const double theta = std::numbers::pi / 2 * i / (grid_theta - 1);
    const double ct = std::cos(theta), st = std::sin(theta);
    const double ar = ct * p1.real(), ai = ct * p1.imag();
    const double br = ct * q1.real(), bi = ct * q1.imag();
    double row_best = -1;
    for (int j = 0; j < grid_phi; ++j) {
      const double v1r = ar + st * p2r[j], v1i = ai + st * p2i[j];
      const double v2r = br + st * q2r[j], v2i = bi + st * q2i[j];
      const double g = std::min(v1r * v1r + v1i * v1i, v2r * v2r + v2i * v2i);
      row_best = std::max(row_best, g);
    }
    if (row_best > out.z_best) {
      out.z_best = row_best;
      best_i = i;
      for (int j = 0; j < grid_phi; ++j) {
        const double v1r = ar + st * p2r[j], v1i = ai + st * p2i[j];
        const double v2r = br + st * q2r[j], v2i = bi + st * q2i[j];
        if (std::min(v1r * v1r + v1i * v1i, v2r * v2r + v2i * v2i) == row_best) {
          best_j = j;
          break;
        }
      }
    }
  }
  const double theta = std::numbers::pi / 2 * best_i / (grid_theta - 1);
  out.w_best = std::cos(theta) * u1 +
               (std::sin(theta) * std::polar(1.0, 2 * std::numbers::pi * best_j / grid_phi)) * u2;

  detail::ComplexGaussian draw(seed);
  ComplexVector<double> v(n);
  out.z_random_best = 0;
  for (std::size_t s = 0; s < random_samples; ++s) {
    for (Eigen::Index k = 0; k < n; ++k) v[k] = draw();
    const double norm = v.norm();
    if (!(norm > 0)) continue;
    v /= norm;
    out.z_random_best = std::max(out.z_random_best, min_gain(eff, v));
  }
  out.random_samples = random_samples;
  return out;
}

}  // namespace wpr
