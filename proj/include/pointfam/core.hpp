#pragma once

// Parameters of the four-parameter family of penetrable point interactions and
// the boundary condition they define at x = 0 (units with hbar = 1):
//
//   ( psi'(+0), 2m psi(+0) )^T = U ( psi'(-0), 2m psi(-0) )^T,
//   U = e^{i theta} [[alpha, beta], [delta, gamma]],   alpha*gamma - beta*delta = 1.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

#include "pointfam/errors.hpp"

namespace pointfam {

using complex = std::complex<double>;

inline constexpr double kConstraintTolerance = 1e-12;
/// |sin theta| below this counts as e^{i theta} = +-1.
inline constexpr double kPhaseTolerance = 1e-12;

/// Unchecked parameter tuple as read from input.
struct RawParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 1.0;
  double delta = 0.0;
  double theta = 0.0;
  double mass = 1.0;
};

/// The alternate (a, b, c, d) parameterization used in the literature:
/// U = e^{i theta} [[d, c], [b, a]], ad - bc = 1.
struct Abcd {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;
};

class InteractionParams;
InteractionParams validate_params(const RawParams& raw);

/// A validated interaction. Values are stored exactly as given; the
/// constraint is checked, never enforced by projection.
class InteractionParams {
 public:
  /// Skips validation. Only for negative controls that need a parameter set
  /// off the constraint surface.
  static InteractionParams unchecked(const RawParams& raw) { return InteractionParams(raw); }

  double alpha() const { return raw_.alpha; }
  double beta() const { return raw_.beta; }
  double gamma() const { return raw_.gamma; }
  double delta() const { return raw_.delta; }
  double theta() const { return raw_.theta; }
  double mass() const { return raw_.mass; }
  const RawParams& raw() const { return raw_; }

  complex phase() const { return std::polar(1.0, raw_.theta); }
  double determinant() const { return raw_.alpha * raw_.gamma - raw_.beta * raw_.delta; }

  /// e^{i theta} = +-1 up to kPhaseTolerance.
  bool phase_is_real() const { return std::abs(std::sin(raw_.theta)) <= kPhaseTolerance; }
  /// +1 or -1 when the phase is real, 0 otherwise.
  int phase_sign() const {
    if (!phase_is_real()) return 0;
    return std::cos(raw_.theta) > 0.0 ? 1 : -1;
  }

  Abcd to_abcd() const { return {raw_.gamma, raw_.delta, raw_.beta, raw_.alpha}; }

  InteractionParams with_theta(double theta) const {
    RawParams r = raw_;
    r.theta = theta;
    return InteractionParams(r);
  }
  InteractionParams with_mass(double mass) const {
    RawParams r = raw_;
    r.mass = mass;
    return validate_params(r);
  }

 private:
  explicit InteractionParams(const RawParams& raw) : raw_(raw) {}
  friend InteractionParams validate_params(const RawParams& raw);

  RawParams raw_;
};

inline std::string describe(const RawParams& r) {
  std::ostringstream os;
  os.precision(17);
  os << "(alpha=" << r.alpha << ", beta=" << r.beta << ", gamma=" << r.gamma << ", delta=" << r.delta
     << ", theta=" << r.theta << ", mass=" << r.mass << ")";
  return os.str();
}

inline InteractionParams validate_params(const RawParams& raw) {
  for (double v : {raw.alpha, raw.beta, raw.gamma, raw.delta, raw.theta, raw.mass}) {
    if (!std::isfinite(v)) throw InvalidArgument("parameters must be finite, got " + describe(raw));
  }
  if (!(raw.mass > 0.0)) {
    throw NonPositiveMass("mass must be positive, got " + describe(raw));
  }
  const double det = raw.alpha * raw.gamma - raw.beta * raw.delta;
  if (!(std::abs(det - 1.0) <= kConstraintTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha*gamma - beta*delta = " << det << " != 1 for " << describe(raw);
    throw ConstraintViolation(os.str());
  }
  return InteractionParams(raw);
}

inline InteractionParams from_abcd(double a, double b, double c, double d, double theta, double mass) {
  return validate_params({.alpha = d, .beta = c, .gamma = a, .delta = b, .theta = theta, .mass = mass});
}

inline InteractionParams from_abcd(const Abcd& p, double theta, double mass) {
  return from_abcd(p.a, p.b, p.c, p.d, theta, mass);
}

enum class InteractionKind { delta, delta_prime, anti_delta };

/// Named members of the family, all with e^{i theta} = -1:
///   delta       V = g delta(x):   (alpha, beta, gamma, delta) = (-1, -g, -1, 0)
///   delta_prime strength c:       (-1, 0, -1, -c)
///   anti_delta  strength g:       (1, g, 1, 0), the delta potential with the
///               signs of alpha..delta reversed; binds for g < 0 with the same
///               kappa = -g m as the delta potential.
inline InteractionParams canonical_interaction(InteractionKind kind, double strength, double mass) {
  constexpr double pi = std::numbers::pi;
  switch (kind) {
    case InteractionKind::delta:
      return validate_params({-1.0, -strength, -1.0, 0.0, pi, mass});
    case InteractionKind::delta_prime:
      return validate_params({-1.0, 0.0, -1.0, -strength, pi, mass});
    case InteractionKind::anti_delta:
      return validate_params({1.0, strength, 1.0, 0.0, pi, mass});
  }
  throw InvalidArgument("unknown interaction kind");
}

/// U = e^{i theta} [[alpha, beta], [delta, gamma]], acting on (psi', 2m psi).
struct BoundaryMatrix {
  std::array<std::array<complex, 2>, 2> entries{};

  complex determinant() const {
    return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
  }
  std::array<complex, 2> operator*(const std::array<complex, 2>& v) const {
    return {entries[0][0] * v[0] + entries[0][1] * v[1], entries[1][0] * v[0] + entries[1][1] * v[1]};
  }
};

inline BoundaryMatrix boundary_matrix(const InteractionParams& p) {
  const complex w = p.phase();
  return {{{{w * p.alpha(), w * p.beta()}, {w * p.delta(), w * p.gamma()}}}};
}

/// Wavefunction value and derivative on one side of the interaction point.
struct SideValues {
  complex derivative;
  complex value;
};

/// Maps the limits at x -> 0- to the limits at x -> 0+.
inline SideValues apply_boundary(const InteractionParams& p, complex psi_prime_minus, complex psi_minus) {
  const double two_m = 2.0 * p.mass();
  const auto out = boundary_matrix(p) * std::array<complex, 2>{psi_prime_minus, two_m * psi_minus};
  return {out[0], out[1] / two_m};
}

}  // namespace pointfam
