#pragma once

// Brute-force oracles for the closed forms. Everything here is derived from
// the boundary condition and the free Schroedinger equation directly; this
// header deliberately includes only core.hpp and the plain result types, never
// the modules it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pointfam/core.hpp"
#include "pointfam/states.hpp"

namespace pointfam::verify {

struct ResidualReport {
  std::string check_name;
  double max_residual = 0.0;
  int samples = 0;
  bool passed = false;
  double tolerance = 0.0;
};

inline ResidualReport make_report(std::string name, double max_residual, int samples, double tolerance) {
  // NaN never passes.
  return {std::move(name), max_residual, samples, max_residual <= tolerance, tolerance};
}

// ---------------------------------------------------------------------------
// Bound states: bracket sign changes of delta k^2 + 2 (alpha+gamma) k m + 4 beta m^2.

inline double bound_polynomial(const InteractionParams& p, double kappa) {
  const double m = p.mass();
  return (p.delta() * kappa + 2.0 * (p.alpha() + p.gamma()) * m) * kappa + 4.0 * p.beta() * m * m;
}

/// Upper bound on |kappa| for any root when delta != 0.
inline double kappa_search_bound(const InteractionParams& p) {
  const double m = p.mass();
  const double ad = std::abs(p.delta());
  return 2.0 * (1.0 + 2.0 * m * std::abs(p.alpha() + p.gamma()) +
                4.0 * m * std::sqrt(std::abs(p.beta())) * std::max(1.0, std::sqrt(ad))) /
         std::max(ad, 1e-30);
}

/// Positive roots (> 1e-12), ascending.
inline std::vector<double> oracle_bound_kappas(const InteractionParams& p) {
  constexpr double lower = 1e-12;
  const double m = p.mass();
  std::vector<double> roots;
  if (p.delta() == 0.0) {
    const double slope = 2.0 * (p.alpha() + p.gamma()) * m;
    if (slope != 0.0) {
      const double kappa = -4.0 * p.beta() * m * m / slope;
      if (kappa > lower) roots.push_back(kappa);
    }
    return roots;
  }
  const double upper = kappa_search_bound(p);
  // Distinct roots are at least 4m/|delta| apart; sample four times finer.
  const double spacing = m / std::abs(p.delta());
  const auto intervals = static_cast<std::size_t>(std::ceil((upper - lower) / spacing)) + 1000;
  const auto node = [&](std::size_t i) {
    return lower + (upper - lower) * static_cast<double>(i) / static_cast<double>(intervals);
  };
  double a = node(0);
  double fa = bound_polynomial(p, a);
  for (std::size_t i = 1; i <= intervals; ++i) {
    double b = node(i);
    double fb = bound_polynomial(p, b);
    if (fb == 0.0) {
      roots.push_back(b);
    } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      double lo = a, hi = b, flo = fa;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = bound_polynomial(p, mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Scattering: impose the boundary condition on plane waves and solve for (t, r).

enum class Incidence { plus, minus };

struct MatchedWave {
  complex t;
  complex r;
};

/// Solves A z = b for a 2x2 complex system by row-scaled partial pivoting.
inline std::array<complex, 2> solve2(std::array<std::array<complex, 2>, 2> a, std::array<complex, 2> b) {
  for (int row = 0; row < 2; ++row) {
    const double scale = std::max(std::abs(a[row][0]), std::abs(a[row][1]));
    if (scale == 0.0) throw SingularSystem("matching system has an empty row");
    a[row][0] /= scale;
    a[row][1] /= scale;
    b[row] /= scale;
  }
  if (std::abs(a[1][0]) > std::abs(a[0][0])) {
    std::swap(a[0], a[1]);
    std::swap(b[0], b[1]);
  }
  if (std::abs(a[0][0]) < 1e-300) throw SingularSystem("matching system is singular");
  const complex f = a[1][0] / a[0][0];
  const complex a11 = a[1][1] - f * a[0][1];
  const complex b1 = b[1] - f * b[0];
  if (std::abs(a11) < 1e-300) throw SingularSystem("matching system is singular");
  const complex z1 = b1 / a11;
  const complex z0 = (b[0] - a[0][1] * z1) / a[0][0];
  return {z0, z1};
}

/// Minus: e^{ikx} + r e^{-ikx} for x < 0 and t e^{ikx} for x > 0.
/// Plus:  e^{-ikx} + r e^{ikx} for x > 0 and t e^{-ikx} for x < 0.
inline MatchedWave scattering_matching_oracle(const InteractionParams& p, double k, Incidence incidence) {
  if (!(k > 0.0)) throw InvalidArgument("wavenumber must be positive");
  const complex i{0.0, 1.0};
  const complex w = p.phase();
  const double two_m = 2.0 * p.mass();
  const double al = p.alpha(), be = p.beta(), ga = p.gamma(), de = p.delta();
  std::array<std::array<complex, 2>, 2> a;
  std::array<complex, 2> b;
  if (incidence == Incidence::minus) {
    // psi'(-0) = ik(1 - r), psi(-0) = 1 + r, psi'(+0) = ik t, psi(+0) = t.
    a = {{{i * k, w * (al * i * k - two_m * be)}, {two_m, w * (de * i * k - two_m * ga)}}};
    b = {w * (al * i * k + two_m * be), w * (de * i * k + two_m * ga)};
  } else {
    // psi'(-0) = -ik t, psi(-0) = t, psi'(+0) = -ik + ik r, psi(+0) = 1 + r.
    a = {{{w * (-al * i * k + two_m * be), -i * k}, {w * (-de * i * k + two_m * ga), -two_m}}};
    b = {-i * k, two_m};
  }
  const auto z = solve2(a, b);
  return {z[0], z[1]};
}

// ---------------------------------------------------------------------------
// N-body states evaluated from scratch: C(parity of ordering) exp(-kappa S),
// S = sum_{i<j} |x_i - x_j| / sqrt 2.

/// Coefficient lookup by descending ordering (1-based labels).
using CoefficientFn = std::function<complex(std::span<const int>)>;

inline bool ordering_is_even(std::span<const int> ordering) {
  int inversions = 0;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    for (std::size_t j = i + 1; j < ordering.size(); ++j) inversions += ordering[i] > ordering[j] ? 1 : 0;
  }
  return inversions % 2 == 0;
}

inline CoefficientFn parity_coefficients(const NBodyBoundState& s) {
  return [c_even = s.c_even, c_odd = s.c_odd](std::span<const int> ordering) {
    return ordering_is_even(ordering) ? c_even : c_odd;
  };
}

inline std::vector<int> descending_ordering(std::span<const double> x) {
  std::vector<int> ord(x.size());
  std::iota(ord.begin(), ord.end(), 1);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return x[a - 1] > x[b - 1]; });
  return ord;
}

inline double pair_sum(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) s += std::abs(x[i] - x[j]);
  }
  return s / std::sqrt(2.0);
}

/// Boundary condition across x_plus = x_minus for particle labels (1-based)
/// plus_label, minus_label: the "+" side of the pair interaction is
/// x_plus > x_minus. Samples `samples` points on the hyperplane with every
/// other particle at least 0.75/kappa from the coincident pair and 0.1/kappa
/// from each other, computes one-sided values and normal derivatives from the
/// exponential form, and reports the boundary-condition residual relative to
/// the local wavefunction scale.
inline ResidualReport pair_boundary_residual(const InteractionParams& p, double kappa, int n, int plus_label,
                                             int minus_label, const CoefficientFn& coefficient, int samples,
                                             double tolerance, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  const double spread = 4.0 / kappa;
  std::uniform_real_distribution<double> pos(-spread, spread);
  const double away = 0.75 / kappa, apart = 0.1 / kappa;
  const auto matrix = boundary_matrix(p);
  const double two_m = 2.0 * p.mass();
  const double inv_s2 = 1.0 / std::sqrt(2.0);

  double worst = 0.0;
  for (int sample = 0; sample < samples; ++sample) {
    std::vector<double> x(n);
    bool ok = false;
    while (!ok) {
      const double pair_at = pos(rng);
      for (int k = 0; k < n; ++k) x[k] = pos(rng);
      x[plus_label - 1] = x[minus_label - 1] = pair_at;
      ok = true;
      for (int a = 0; a < n && ok; ++a) {
        if (a == plus_label - 1 || a == minus_label - 1) continue;
        if (std::abs(x[a] - pair_at) < away) ok = false;
        for (int b = a + 1; b < n && ok; ++b) {
          if (b == plus_label - 1 || b == minus_label - 1) continue;
          if (std::abs(x[a] - x[b]) < apart) ok = false;
        }
      }
    }
    const double envelope = std::exp(-kappa * pair_sum(x));

    // side = +1: x_plus slightly above x_minus.
    const auto one_side = [&](int side) {
      auto ord = descending_ordering(x);
      // Order the tied pair as the side dictates.
      for (std::size_t r = 0; r + 1 < ord.size(); ++r) {
        const bool tied = (ord[r] == plus_label && ord[r + 1] == minus_label) ||
                          (ord[r] == minus_label && ord[r + 1] == plus_label);
        if (tied) {
          ord[r] = side > 0 ? plus_label : minus_label;
          ord[r + 1] = side > 0 ? minus_label : plus_label;
        }
      }
      const complex c = coefficient(ord);
      // dS/dx_k = (1/sqrt2) sum_{b != k} sgn(x_k - x_b), with the tie resolved by side.
      const auto sgn = [&](int a, int b) -> double {
        if (a == plus_label - 1 && b == minus_label - 1) return side;
        if (a == minus_label - 1 && b == plus_label - 1) return -side;
        return x[a] > x[b] ? 1.0 : -1.0;
      };
      double grad_plus = 0.0, grad_minus = 0.0;
      for (int b = 0; b < n; ++b) {
        if (b != plus_label - 1) grad_plus += sgn(plus_label - 1, b);
        if (b != minus_label - 1) grad_minus += sgn(minus_label - 1, b);
      }
      // Unit normal (e_plus - e_minus)/sqrt2 increases x_plus - x_minus over sqrt2 at rate 1.
      const double ds_dn = inv_s2 * inv_s2 * (grad_plus - grad_minus);
      const complex value = c * envelope;
      return SideValues{-kappa * ds_dn * value, value};
    };

    const SideValues plus = one_side(+1);
    const SideValues minus = one_side(-1);
    const auto mapped = matrix * std::array<complex, 2>{minus.derivative, two_m * minus.value};
    const double r0 = std::abs(plus.derivative - mapped[0]);
    const double r1 = std::abs(two_m * plus.value - mapped[1]);
    const double scale = std::max({std::abs(plus.derivative), two_m * std::abs(plus.value),
                                   std::abs(minus.derivative), two_m * std::abs(minus.value)});
    worst = std::max(worst, std::max(r0, r1) / scale);
  }
  return make_report("pair-boundary x" + std::to_string(plus_label) + std::to_string(minus_label), worst, samples,
                     tolerance);
}

enum class PairLine { x12, x23, x31 };

inline std::string to_string(PairLine l) {
  switch (l) {
    case PairLine::x12: return "x12";
    case PairLine::x23: return "x23";
    case PairLine::x31: return "x31";
  }
  return "?";
}

/// Three-body boundary check along one of the lines x12 = 0, x23 = 0, x31 = 0.
inline ResidualReport boundary_residual_3body(const InteractionParams& p, const NBodyBoundState& s, PairLine line,
                                              int samples, double tolerance = 1e-10,
                                              const CoefficientFn& coefficient = {}) {
  if (s.n != 3) throw InvalidArgument("boundary_residual_3body needs a three-body state");
  const auto [a, b] = line == PairLine::x12 ? std::pair{1, 2} : line == PairLine::x23 ? std::pair{2, 3} : std::pair{3, 1};
  auto report = pair_boundary_residual(p, s.kappa, 3, a, b, coefficient ? coefficient : parity_coefficients(s),
                                       samples, tolerance);
  report.check_name = "boundary " + to_string(line);
  return report;
}

/// Finite-difference check of -(1/2m) sum_i d^2 psi/dx_i^2 = E psi at random
/// interior points (coordinates in [-1.5, 1.5]/kappa, pairwise separations
/// >= 10 h). Default step h = 1e-4/kappa.
inline ResidualReport interior_residual(const NBodyBoundState& s, int points, double h = 0.0,
                                        double tolerance = 1e-6, std::uint64_t seed = 11) {
  if (h <= 0.0) h = 1e-4 / s.kappa;
  const int n = s.n;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(-1.5 / s.kappa, 1.5 / s.kappa);
  const auto coefficient = parity_coefficients(s);
  const auto psi = [&](std::span<const double> x) {
    return coefficient(descending_ordering(x)) * std::exp(-s.kappa * pair_sum(x));
  };

  double worst = 0.0;
  std::vector<double> x(n);
  for (int sample = 0; sample < points; ++sample) {
    bool ok = false;
    while (!ok) {
      for (auto& v : x) v = pos(rng);
      ok = true;
      for (int a = 0; a < n && ok; ++a) {
        for (int b = a + 1; b < n && ok; ++b) ok = std::abs(x[a] - x[b]) >= 10.0 * h;
      }
    }
    const complex center = psi(x);
    complex laplacian{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      auto xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      laplacian += (psi(xp) - 2.0 * center + psi(xm)) / (h * h);
    }
    const complex kinetic = -laplacian / (2.0 * s.mass);
    const complex expected = s.energy * center;
    worst = std::max(worst, std::abs(kinetic - expected) / std::abs(expected));
  }
  return make_report("interior N=" + std::to_string(n), worst, points, tolerance);
}

/// Overlap integral of two N = 2 states in the relative coordinate x = x12
/// over [-L, L], L = 20/min(kappa), by composite Simpson on each half line.
inline complex two_body_overlap(const NBodyBoundState& a, const NBodyBoundState& b, int intervals = 200000) {
  if (a.n != 2 || b.n != 2) throw InvalidArgument("two_body_overlap needs two-body states");
  const double length = 20.0 / std::min(a.kappa, b.kappa);
  const auto psi = [](const NBodyBoundState& s, double x) {
    // x = (x1 - x2)/sqrt2 > 0 is the ordering (1, 2).
    const std::array<int, 2> ord = x > 0.0 ? std::array<int, 2>{1, 2} : std::array<int, 2>{2, 1};
    const complex c = ordering_is_even(ord) ? s.c_even : s.c_odd;
    return c * std::exp(-s.kappa * std::abs(x));
  };
  const auto half = [&](double lo, double hi, double probe) {
    // probe picks the side at the shared endpoint x = 0.
    const int m = intervals + intervals % 2;
    const double h = (hi - lo) / m;
    complex sum{0.0, 0.0};
    for (int i = 0; i <= m; ++i) {
      double x = lo + h * i;
      if (x == 0.0) x = probe;
      const double weight = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      sum += weight * std::conj(psi(a, x)) * psi(b, x);
    }
    return sum * h / 3.0;
  };
  return half(-length, 0.0, -1e-300) + half(0.0, length, 1e-300);
}

}  // namespace pointfam::verify
