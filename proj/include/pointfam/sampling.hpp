#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "pointfam/core.hpp"

namespace pointfam {

/// Point n of the R2 low-discrepancy sequence in [0,1)^2.
inline std::array<double, 2> r2_point(std::uint64_t n) {
  // 1/g and 1/g^2 for the plastic number g, the real root of x^3 = x + 1.
  constexpr double a1 = 0.7548776662466927;
  constexpr double a2 = 0.5698402909980532;
  const double k = static_cast<double>(n);
  return {std::fmod(0.5 + a1 * k, 1.0), std::fmod(0.5 + a2 * k, 1.0)};
}

/// Random parameters exactly on the constraint surface: alpha, gamma, delta
/// uniform in [-3, 3], theta in [0, 2 pi), mass in [0.2, 2]. With |delta| > 0.1
/// beta = (alpha gamma - 1)/delta; otherwise delta = 0, gamma = 1/alpha and
/// beta uniform in [-3, 3].
inline InteractionParams draw_valid_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> mass(0.2, 2.0);
  RawParams r;
  r.alpha = unit(rng);
  r.gamma = unit(rng);
  r.delta = unit(rng);
  r.theta = angle(rng);
  r.mass = mass(rng);
  if (std::abs(r.delta) > 0.1) {
    r.beta = (r.alpha * r.gamma - 1.0) / r.delta;
  } else {
    // Keep gamma = 1/alpha bounded.
    while (std::abs(r.alpha) < 0.05) r.alpha = unit(rng);
    r.delta = 0.0;
    r.gamma = 1.0 / r.alpha;
    r.beta = unit(rng);
  }
  return validate_params(r);
}

}  // namespace pointfam
