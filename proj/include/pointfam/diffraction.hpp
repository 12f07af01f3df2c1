#pragma once

// Three-body ray picture of McGuire's construction. A ray enters region 2 and
// leaves into region 1 along two equal-length geometries: hitting x12 = 0
// first (two paths) or x31 = 0 first (one path). The construction needs the
// outgoing amplitudes of both geometries to agree for every (k, phi); that is
// the no-diffraction condition, which holds exactly when
// alpha = gamma, delta = 0 and e^{i theta} = +-1 (so alpha = gamma = +-1).
//
// Incidence angles phi1 = phi, phi2 = phi + pi/3, phi3 = pi/3 - phi, with the
// normal wavenumbers k_i = k sin(phi_i) obeying k1 + k3 = k2.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pointfam/core.hpp"
#include "pointfam/parallel.hpp"
#include "pointfam/sampling.hpp"
#include "pointfam/scattering.hpp"

namespace pointfam {

struct RayKinematics {
  double k = 0.0;
  double phi = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
};

inline constexpr double kMomentumIdentityTolerance = 1e-12;

inline RayKinematics ray_kinematics(double k, double phi) {
  constexpr double third = std::numbers::pi / 3.0;
  if (!(k > 0.0)) throw InvalidArgument("total wavenumber must be positive");
  if (!(phi > 0.0 && phi < third)) throw GrazingAngle("incidence parameter must lie in (0, pi/3)");
  RayKinematics r;
  r.k = k;
  r.phi = phi;
  r.phi1 = phi;
  r.phi2 = phi + third;
  r.phi3 = third - phi;
  r.k1 = k * std::sin(r.phi1);
  r.k2 = k * std::sin(r.phi2);
  r.k3 = k * std::sin(r.phi3);
  if (std::abs(r.k1 + r.k3 - r.k2) > kMomentumIdentityTolerance * k) {
    throw InvalidArgument("momentum identity k1 + k3 = k2 violated");
  }
  return r;
}

/// Which suffix the middle reflection carries on the second path of the
/// x12-first geometry. The two written forms of the path product differ
/// there: R2- (equation form) versus R2+ (text form). They coincide whenever
/// R+ = R-, i.e. whenever alpha = gamma.
enum class PathConvention { equation, text };

struct DiffractionReport {
  complex amp_fig3;  // x12 hit first: R1- R2- T3- + T1- R2(-/+) R3+
  complex amp_fig4;  // x31 hit first: R3- T2+ R1+
  complex residual;  // amp_fig3 - amp_fig4
  double residual_norm = 0.0;
};

inline DiffractionReport outgoing_amplitudes(const InteractionParams& p, const RayKinematics& kin,
                                             PathConvention convention = PathConvention::equation) {
  const auto a1 = amplitudes(p, kin.k1);
  const auto a2 = amplitudes(p, kin.k2);
  const auto a3 = amplitudes(p, kin.k3);
  const complex middle = convention == PathConvention::equation ? a2.r_minus : a2.r_plus;

  DiffractionReport d;
  d.amp_fig3 = a1.r_minus * a2.r_minus * a3.t_minus + a1.t_minus * middle * a3.r_plus;
  d.amp_fig4 = a3.r_minus * a2.t_plus * a1.r_plus;
  d.residual = d.amp_fig3 - d.amp_fig4;
  d.residual_norm = std::abs(d.residual);
  return d;
}

inline constexpr double kNoDiffractionTolerance = 1e-10;

struct DiffractionScan {
  double max_residual = 0.0;
  bool verdict = true;  // no diffraction detected
  int samples = 0;
};

/// (k, phi) of scan sample n: k in (0, 10], phi in [0.01, pi/3 - 0.01].
inline std::pair<double, double> diffraction_scan_point(std::uint64_t n) {
  constexpr double margin = 0.01;
  const auto u = r2_point(n);
  const double k = 10.0 * (1.0 - u[0]);
  const double phi = margin + u[1] * (std::numbers::pi / 3.0 - 2.0 * margin);
  return {k, phi};
}

/// Largest residual over `samples` quasi-random (k, phi) points; the verdict
/// is max_residual <= kNoDiffractionTolerance.
inline DiffractionScan no_diffraction_scan(const InteractionParams& p, int samples,
                                           PathConvention convention = PathConvention::equation,
                                           unsigned threads = 0) {
  if (samples < 1) throw InvalidArgument("need at least one sample");
  const auto residuals = parallel_map<double>(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
    const auto [k, phi] = diffraction_scan_point(i);
    return outgoing_amplitudes(p, ray_kinematics(k, phi), convention).residual_norm;
  });
  DiffractionScan s;
  s.samples = samples;
  s.max_residual = *std::max_element(residuals.begin(), residuals.end());
  s.verdict = s.max_residual <= kNoDiffractionTolerance;
  return s;
}

/// alpha = gamma, delta = 0 and e^{i theta} real, each within tol.
inline bool satisfies_no_diffraction_condition(const InteractionParams& p, double tol = 1e-12) {
  return std::abs(p.alpha() - p.gamma()) <= tol && std::abs(p.delta()) <= tol && std::abs(std::sin(p.theta())) <= tol;
}

}  // namespace pointfam
