#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>

#include "wpr/error.hpp"
#include "wpr/lambert_w.hpp"

namespace wpr {

/// Optimal harvesting fraction for an SNR coefficient beta, with the dual-hop
/// rate it achieves at unit effective gain.
template <typename Scalar>
struct TimeSplitSolution {
  Scalar tau_hat{};
  Scalar beta{};
  Scalar rate{};
};

using TimeSplitSolutiond = TimeSplitSolution<double>;

/// prelog (1 - tau) log2(1 + kappa tau z / (1 - tau)).
///
/// kappa = 2 eta P / N0 with prelog 1/2 is the dual-hop relay objective;
/// kappa = eta P / N0 with prelog 1 is single-hop direct transmission.
template <typename Scalar>
Scalar throughput_g(Scalar tau, Scalar z, Scalar kappa, Scalar prelog) {
  if (!(tau > 0 && tau < 1)) throw DomainError("tau must lie in (0,1)");
  if (!(z >= 0)) throw DomainError("z must be >= 0");
  if (!(kappa > 0) || !(prelog > 0)) throw DomainError("kappa and prelog must be > 0");
  return prelog * (1 - tau) * std::log1p(kappa * z * tau / (1 - tau)) / std::numbers::ln2_v<Scalar>;
}

/// Closed-form maximizer of (1 - tau) log(1 + beta tau / (1 - tau)):
///   tau = (e^{W((beta-1)/e)+1} - 1) / (beta + e^{W((beta-1)/e)+1} - 1).
/// The argmax depends on beta alone; `prelog` only scales the reported rate.
template <typename Scalar>
TimeSplitSolution<Scalar> optimal_tau(Scalar beta, Scalar prelog = Scalar(0.5)) {
  if (!(beta > 0) || std::isinf(beta)) throw DomainError("beta must be finite and > 0");
  constexpr Scalar e = std::numbers::e_v<Scalar>;
  const Scalar arg = std::max((beta - 1) / e, Scalar(-1) / e);
  const Scalar q = std::expm1(lambert_w0(arg) + 1);
  TimeSplitSolution<Scalar> s;
  s.beta = beta;
  s.tau_hat = q / (beta + q);
  s.rate = throughput_g(s.tau_hat, Scalar(1), beta, prelog);
  return s;
}

struct TauSearch {
  double tau{};
  std::size_t local_maxima{};  // strict local maxima seen on the scan grid
};

/// Brute-force maximizer of the time-split objective used to certify
/// optimal_tau: a uniform scan of `resolution` points over (eps, 1 - eps),
/// eps = 1e-9, refined by golden-section search inside the best grid cell.
inline TauSearch oracle_tau_search(double beta, std::size_t resolution) {
  if (resolution < 10'000) throw DomainError("oracle resolution must be >= 1e4");
  if (!(beta > 0)) throw DomainError("beta must be > 0");
  constexpr double eps = 1e-9;
  auto objective = [beta](double t) { return (1 - t) * std::log1p(beta * t / (1 - t)); };
  auto grid = [&](std::size_t i) {
    return eps + (1 - 2 * eps) * static_cast<double>(i) / static_cast<double>(resolution - 1);
  };

  TauSearch out;
  std::size_t best = 0;
  double best_value = objective(grid(0));
  double prev = best_value;
  double cur = objective(grid(1));
  for (std::size_t i = 1; i < resolution; ++i) {
    const double next = i + 1 < resolution ? objective(grid(i + 1)) : -INFINITY;
    if (cur > prev && cur > next) ++out.local_maxima;
    if (cur > best_value) {
      best_value = cur;
      best = i;
    }
    prev = cur;
    cur = next;
  }

  double lo = grid(best == 0 ? 0 : best - 1);
  double hi = grid(best + 1 < resolution ? best + 1 : best);
  constexpr double inv_phi = 0.6180339887498948482;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  out.tau = (lo + hi) / 2;
  return out;
}

}  // namespace wpr
