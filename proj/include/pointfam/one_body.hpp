#pragma once

// Bound states of a single particle on the point interaction (equivalently the
// two-body relative problem in x = (x1 - x2)/sqrt 2).
//
// A level psi = C_+- e^{-kappa |x|} satisfies the boundary condition iff
//   delta kappa^2 + 2 (alpha + gamma) kappa m + 4 beta m^2 = 0,
// i.e. with u = kappa / 2m:  delta u^2 + (alpha + gamma) u + beta = 0.
// The jump ratio is
//   eta = psi(+0)/psi(-0) = -e^{i theta} (alpha + 2 beta m / kappa)
//                         =  e^{i theta} (gamma + delta kappa / 2m).

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pointfam/core.hpp"
#include "pointfam/parallel.hpp"
#include "pointfam/states.hpp"

namespace pointfam {

/// Roots with kappa at or below this are dropped: e^{-kappa|x|} is not normalizable.
inline constexpr double kMinKappa = 1e-12;

namespace detail {

struct ReducedLevel {
  double u;    // kappa / 2m
  double rho;  // eta / e^{i theta}
  Branch branch;
};

/// Real roots of delta u^2 + (alpha + gamma) u + beta = 0 with their eta
/// ratios, any sign. Uses the constraint to write the discriminant as
/// (alpha - gamma)^2 + 4 > 0, so double roots never occur for delta != 0.
inline std::vector<ReducedLevel> reduced_levels(double alpha, double beta, double gamma, double delta) {
  const double sum = alpha + gamma;
  if (delta == 0.0) {
    if (sum == 0.0) return {};
    return {{-beta / sum, gamma, Branch::single}};
  }
  const double diff = gamma - alpha;
  const double s = std::sqrt(diff * diff + 4.0);
  // Each pair is evaluated on the side free of cancellation; the partner
  // follows from the root product beta/delta (resp. rho+ rho- = -1).
  double u_plus, u_minus;
  if (sum >= 0.0) {
    u_minus = -(sum + s) / (2.0 * delta);
    u_plus = -2.0 * beta / (sum + s);
  } else {
    u_plus = (s - sum) / (2.0 * delta);
    u_minus = 2.0 * beta / (s - sum);
  }
  double rho_plus, rho_minus;
  if (diff >= 0.0) {
    rho_plus = 0.5 * (diff + s);
    rho_minus = -1.0 / rho_plus;
  } else {
    rho_minus = 0.5 * (diff - s);
    rho_plus = -1.0 / rho_minus;
  }
  return {{u_plus, rho_plus, Branch::plus}, {u_minus, rho_minus, Branch::minus}};
}

}  // namespace detail

/// Every bound level, lowest energy first. Empty when the interaction does
/// not bind.
inline std::vector<BoundState> bound_spectrum(const InteractionParams& p) {
  const double m = p.mass();
  const complex w = p.phase();
  std::vector<BoundState> states;
  for (const auto& lvl : detail::reduced_levels(p.alpha(), p.beta(), p.gamma(), p.delta())) {
    const double kappa = 2.0 * m * lvl.u;
    if (!(kappa > kMinKappa)) continue;
    BoundState s;
    s.kappa = kappa;
    s.energy = -kappa * kappa / (2.0 * m);
    s.mass = m;
    s.eta = w * lvl.rho;
    s.c_minus = 1.0;
    s.c_plus = s.eta;
    s.branch = lvl.branch;
    states.push_back(s);
  }
  std::sort(states.begin(), states.end(),
            [](const BoundState& a, const BoundState& b) { return a.energy < b.energy; });
  return states;
}

/// eta = -e^{i theta} (alpha + 2 beta m / kappa).
inline complex eta_alpha_form(const InteractionParams& p, double kappa) {
  return -p.phase() * (p.alpha() + 2.0 * p.beta() * p.mass() / kappa);
}

/// eta = e^{i theta} (gamma + delta kappa / 2m).
inline complex eta_gamma_form(const InteractionParams& p, double kappa) {
  return p.phase() * (p.gamma() + p.delta() * kappa / (2.0 * p.mass()));
}

/// Left-hand side of the bound-state quadratic at kappa.
inline double bound_condition(const InteractionParams& p, double kappa) {
  const double m = p.mass();
  return p.delta() * kappa * kappa + 2.0 * (p.alpha() + p.gamma()) * kappa * m + 4.0 * p.beta() * m * m;
}

/// Number of bound states (0, 1 or 2) on the (alpha, gamma) plane at fixed
/// delta. For delta != 0, beta = (alpha gamma - 1)/delta; for delta = 0 the
/// slice must have alpha gamma = 1 and beta has to be given. The count does
/// not depend on the mass; roots are cut at kappa/2m > kMinKappa.
inline int phase_diagram_count(double alpha, double gamma, double delta, std::optional<double> beta = {}) {
  double b;
  if (delta != 0.0) {
    b = (alpha * gamma - 1.0) / delta;
    if (beta && std::abs(*beta - b) > kConstraintTolerance * std::max(1.0, std::abs(b))) {
      throw InvalidSlice("beta is fixed by alpha, gamma, delta when delta != 0");
    }
  } else {
    if (std::abs(alpha * gamma - 1.0) > kConstraintTolerance) {
      throw InvalidSlice("delta = 0 requires alpha*gamma = 1");
    }
    if (!beta) throw InvalidSlice("delta = 0 slice needs an explicit beta");
    b = *beta;
  }
  int count = 0;
  for (const auto& lvl : detail::reduced_levels(alpha, b, gamma, delta)) {
    if (lvl.u > kMinKappa) ++count;
  }
  return count;
}

/// conj(a.c_plus) b.c_plus + conj(a.c_minus) b.c_minus. Vanishes for the two
/// levels of one interaction, which makes their wavefunctions orthogonal.
inline complex orthogonality_sum(const BoundState& a, const BoundState& b) {
  return std::conj(a.c_plus) * b.c_plus + std::conj(a.c_minus) * b.c_minus;
}

/// psi(x). The function jumps at x = 0; x == 0 returns the left limit c_minus.
inline complex eval_bound_wavefunction(const BoundState& s, double x) {
  if (x > 0.0) return s.c_plus * std::exp(-s.kappa * x);
  return s.c_minus * std::exp(s.kappa * x);
}

/// Bound-state counts on an (alpha, gamma) grid at fixed delta.
struct PhaseDiagram {
  double delta = 0.0;
  std::vector<double> alphas;
  std::vector<double> gammas;
  std::vector<int> counts;  // row-major, alpha index outer

  int count(std::size_t i, std::size_t j) const { return counts[i * gammas.size() + j]; }

  /// Cells whose count differs from the next cell in alpha or in gamma; these
  /// trace the region boundaries.
  std::vector<std::pair<std::size_t, std::size_t>> transition_cells() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      for (std::size_t j = 0; j < gammas.size(); ++j) {
        const int c = count(i, j);
        const bool right = i + 1 < alphas.size() && count(i + 1, j) != c;
        const bool up = j + 1 < gammas.size() && count(i, j + 1) != c;
        if (right || up) out.emplace_back(i, j);
      }
    }
    return out;
  }
};

inline PhaseDiagram phase_diagram_scan(double delta, std::span<const double> alphas, std::span<const double> gammas,
                                       std::optional<double> beta = {}, unsigned threads = 0) {
  PhaseDiagram d;
  d.delta = delta;
  d.alphas.assign(alphas.begin(), alphas.end());
  d.gammas.assign(gammas.begin(), gammas.end());
  d.counts.assign(alphas.size() * gammas.size(), 0);
  parallel_for(alphas.size(), threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      d.counts[i * gammas.size() + j] = phase_diagram_count(alphas[i], gammas[j], delta, beta);
    }
  });
  return d;
}

}  // namespace pointfam
