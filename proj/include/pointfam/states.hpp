#pragma once

// Plain result types shared between the closed-form modules and the
// independent oracles in verify.hpp. Nothing here computes physics.

#include <string_view>

#include "pointfam/core.hpp"

namespace pointfam {

/// Which root of the bound-state quadratic a level comes from. For delta != 0
/// the two roots are kappa/2m = [-(alpha+gamma) +- sqrt((alpha-gamma)^2 + 4)] / (2 delta);
/// for delta = 0 there is a single root.
enum class Branch { plus, minus, single };

inline std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::plus: return "plus";
    case Branch::minus: return "minus";
    case Branch::single: return "single";
  }
  return "?";
}

/// One bound level psi(x) = c_plus e^{-kappa x} (x > 0), c_minus e^{kappa x} (x < 0).
/// Gauge: c_minus = 1, c_plus = eta = psi(+0)/psi(-0).
struct BoundState {
  double kappa = 0.0;
  double energy = 0.0;
  double mass = 1.0;
  complex eta{1.0, 0.0};
  complex c_plus{1.0, 0.0};
  complex c_minus{1.0, 0.0};
  Branch branch = Branch::single;
};

enum class Parity { even, odd };

/// N-body bound state psi = C_nu exp(-kappa sum_{i>j} |x_i - x_j| / sqrt 2),
/// energy -kappa^2 N (N^2 - 1) / (12 m). The coefficient table over the N!
/// orderings is held as the pair (c_even, c_odd); c_even = 1 is the gauge.
struct NBodyBoundState {
  int n = 2;
  double kappa = 0.0;
  double energy = 0.0;
  double mass = 1.0;
  complex eta{1.0, 0.0};
  complex c_even{1.0, 0.0};
  complex c_odd{1.0, 0.0};
  Branch branch = Branch::single;
  /// False when N >= 4 and eta^2 != 1: then no fixed orientation of the pair
  /// interactions makes a two-valued table satisfy every pair boundary
  /// condition, and propagated_coefficient() in many_body.hpp gives the
  /// consistent coefficients instead.
  bool parity_consistent = true;

  complex coefficient(Parity p) const { return p == Parity::even ? c_even : c_odd; }
};

/// One-body scattering at wavenumber k. Suffix plus: incidence from the right
/// (x > 0 side); minus: incidence from the left.
struct ScatteringAmplitudes {
  double k = 0.0;
  complex t_plus;
  complex t_minus;
  complex r_plus;
  complex r_minus;
  complex denominator;
};

}  // namespace pointfam
