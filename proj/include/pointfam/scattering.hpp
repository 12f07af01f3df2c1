#pragma once

// Closed-form transmission and reflection for the four-parameter family:
//   T+- = 4 i e^{-+ i theta} k m / D
//   R+- = (delta k^2 -+ 2 i k m (alpha - gamma) + 4 beta m^2) / D
//   D   = delta k^2 + 2 i k m (alpha + gamma) - 4 beta m^2
// The amplitudes depend on k and m only through k/m.

#include <algorithm>
#include <cmath>

#include "pointfam/core.hpp"
#include "pointfam/states.hpp"

namespace pointfam {

inline ScatteringAmplitudes amplitudes(const InteractionParams& p, double k) {
  if (!(k > 0.0)) throw InvalidArgument("wavenumber must be positive");
  const double m = p.mass();
  const complex i{0.0, 1.0};
  const complex d = p.delta() * k * k + 2.0 * i * k * m * (p.alpha() + p.gamma()) - 4.0 * p.beta() * m * m;
  if (std::abs(d) < 1e-300) throw SingularDenominator("scattering denominator vanished");
  const complex cross = 2.0 * i * k * m * (p.alpha() - p.gamma());
  const double even = p.delta() * k * k + 4.0 * p.beta() * m * m;

  ScatteringAmplitudes a;
  a.k = k;
  a.denominator = d;
  a.t_plus = 4.0 * i * std::conj(p.phase()) * k * m / d;
  a.t_minus = 4.0 * i * p.phase() * k * m / d;
  a.r_plus = (even - cross) / d;
  a.r_minus = (even + cross) / d;
  return a;
}

/// Largest deviation of |t|^2 + |r|^2 from 1 over both incidences.
inline double unitarity_defect(const ScatteringAmplitudes& a) {
  const double plus = std::norm(a.t_plus) + std::norm(a.r_plus) - 1.0;
  const double minus = std::norm(a.t_minus) + std::norm(a.r_minus) - 1.0;
  return std::max(std::abs(plus), std::abs(minus));
}

}  // namespace pointfam
