#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>

#include "wpr/error.hpp"

namespace wpr {

namespace detail {

template <std::floating_point T>
T lambert_w0_initial_guess(T x) {
  constexpr T e = std::numbers::e_v<T>;
  if (x < T(-0.25)) {
    // Branch-point series in p = sqrt(2(e x + 1)).
    const T p = std::sqrt(std::max(T(0), 2 * (e * x + 1)));
    return T(-1) + p * (T(1) + p * (T(-1) / 3 + p * T(11) / 72));
  }
  if (x < T(3)) return std::log1p(x);
  const T l = std::log(x);
  const T ll = std::log(l);
  return l - ll + ll / l;
}

}  // namespace detail

/// Principal branch W0 of the Lambert W function, the solution w >= -1 of
/// w e^w = x. Halley iteration from a branch-aware initial guess.
template <std::floating_point T>
T lambert_w0(T x) {
  constexpr T branch_point = -1 / std::numbers::e_v<T>;
  if (std::isnan(x) || x < branch_point) throw DomainError("lambert_w0 requires x >= -1/e");
  if (x == 0) return T(0);
  if (x == branch_point) return T(-1);
  if (std::isinf(x)) return x;

  constexpr int max_iterations = 50;
  const T tol = 64 * std::numeric_limits<T>::epsilon();
  T w = detail::lambert_w0_initial_guess(x);
  for (int i = 0; i < max_iterations; ++i) {
    const T ew = std::exp(w);
    const T f = w * ew - x;
    const T wp1 = w + 1;
    if (wp1 <= 0) {
      // Overshot the branch point.
      w = T(-1) + std::sqrt(std::numeric_limits<T>::epsilon());
      continue;
    }
    const T step = f / (ew * wp1 - (w + 2) * f / (2 * wp1));
    w -= step;
    if (std::abs(step) <= tol * (std::abs(w) + tol)) break;
  }
  return w;
}

}  // namespace wpr
