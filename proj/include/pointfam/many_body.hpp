#pragma once

// Exact N-body bound states for equal-mass particles with a common pairwise
// point interaction acting on x_ij = (x_i - x_j)/sqrt 2.
//
// Inside each of the N! orderings the state is C_nu exp(-kappa sum_{i>j}|x_ij|)
// with kappa a root of the two-body problem. Crossing the hyperplane x_ij = 0
// from x_ij > 0 to x_ij < 0 divides the coefficient by eta; crossing back
// multiplies by eta.
//
// Pair orientation matters when the interaction is not reflection symmetric.
// The three-body problem uses the cyclic pairs (x12, x23, x31); oriented_pair()
// extends that rotationally to any N. With this rule the coefficient of an
// ordering is eta^{P(ordering) - P(identity)}, P counting pairs whose oriented
// coordinate is positive. For N <= 3, or whenever eta^2 = 1, that reduces to the
// parity table c_even = 1, c_odd = 1/eta stored in NBodyBoundState.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pointfam/core.hpp"
#include "pointfam/one_body.hpp"
#include "pointfam/states.hpp"

namespace pointfam {

inline constexpr double kCoincidenceTolerance = 1e-14;
inline constexpr int kDefaultMaxParticles = 8;

struct JacobiCoords {
  double x = 0.0;  // (x1 - x2)/sqrt 2
  double y = 0.0;  // sqrt(2/3) ((x1 + x2)/2 - x3)
  double z = 0.0;  // (x1 + x2 + x3)/sqrt 3
};

inline JacobiCoords jacobi_transform(double x1, double x2, double x3) {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  return {(x1 - x2) / s2, std::sqrt(2.0 / 3.0) * (0.5 * (x1 + x2) - x3), (x1 + x2 + x3) / s3};
}

inline std::array<double, 3> cartesian_from_jacobi(const JacobiCoords& j) {
  const double a = j.x / std::sqrt(2.0);
  const double b = j.y / std::sqrt(6.0);
  const double c = j.z / std::sqrt(3.0);
  return {a + b + c, -a + b + c, -2.0 * b + c};
}

/// exp(-kappa (|x| + |x + sqrt3 y|/2 + |x - sqrt3 y|/2)): the three-body
/// envelope in Jacobi coordinates, symmetric under every particle exchange.
inline double three_body_envelope(double x, double y, double kappa) {
  const double s3y = std::sqrt(3.0) * y;
  return std::exp(-kappa * (std::abs(x) + 0.5 * std::abs(x + s3y) + 0.5 * std::abs(x - s3y)));
}

/// An ordering of particles 1..N by descending coordinate.
struct Configuration {
  std::vector<int> ordering;
  Parity parity = Parity::even;
  /// N = 3 only: region 1..6 labelled by the signs of (x12, x23, x31):
  /// 1 (++-), 2 (-+-), 3 (-++), 4 (--+), 5 (+-+), 6 (+--).
  std::optional<int> region;
};

/// Sign of a permutation of 1..N.
inline Parity permutation_parity(std::span<const int> ordering) {
  int inversions = 0;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    for (std::size_t j = i + 1; j < ordering.size(); ++j) {
      if (ordering[i] > ordering[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? Parity::even : Parity::odd;
}

inline int three_body_region(double x1, double x2, double x3) {
  const bool p12 = x1 > x2, p23 = x2 > x3, p31 = x3 > x1;
  if (p12 && p23 && !p31) return 1;
  if (!p12 && p23 && !p31) return 2;
  if (!p12 && p23 && p31) return 3;
  if (!p12 && !p23 && p31) return 4;
  if (p12 && !p23 && p31) return 5;
  return 6;
}

/// Resolves a coincidence x_first == x_second as the limit x_first > x_second.
/// Particle labels are 1-based.
struct BoundarySide {
  int first = 1;
  int second = 2;
};

namespace detail {

inline Configuration make_configuration(std::vector<int> ordering) {
  Configuration c;
  c.parity = permutation_parity(ordering);
  c.ordering = std::move(ordering);
  if (c.ordering.size() == 3) {
    // Any coordinates realizing the ordering give the same sign pattern.
    std::array<double, 3> x{};
    for (int r = 0; r < 3; ++r) x[c.ordering[r] - 1] = 3.0 - r;
    c.region = three_body_region(x[0], x[1], x[2]);
  }
  return c;
}

inline Configuration configuration_impl(std::span<const double> coords, std::optional<BoundarySide> side) {
  const int n = static_cast<int>(coords.size());
  std::vector<int> ordering(n);
  std::iota(ordering.begin(), ordering.end(), 1);
  std::stable_sort(ordering.begin(), ordering.end(),
                   [&](int a, int b) { return coords[a - 1] > coords[b - 1]; });
  for (int r = 0; r + 1 < n; ++r) {
    const int a = ordering[r], b = ordering[r + 1];
    if (std::abs(coords[a - 1] - coords[b - 1]) >= kCoincidenceTolerance) continue;
    const bool is_side_pair = side && ((a == side->first && b == side->second) ||
                                       (a == side->second && b == side->first));
    if (!is_side_pair) {
      throw OnBoundary("particles " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
    }
    ordering[r] = side->first;
    ordering[r + 1] = side->second;
  }
  return make_configuration(std::move(ordering));
}

}  // namespace detail

/// Ordering, parity and (N = 3) region of a point. Throws OnBoundary when two
/// coordinates coincide within kCoincidenceTolerance.
inline Configuration configuration_of(std::span<const double> coords) {
  return detail::configuration_impl(coords, std::nullopt);
}

/// Same, taking the one-sided limit given by side when exactly that pair coincides.
inline Configuration configuration_of(std::span<const double> coords, BoundarySide side) {
  return detail::configuration_impl(coords, side);
}

/// Orientation of the interaction between particles i and j (1-based) among n:
/// returns (a, b) such that the boundary condition acts on x_ab with x_ab > 0
/// as its "+" side. Cyclic for n = 3: (1,2), (2,3), (3,1).
inline std::pair<int, int> oriented_pair(int i, int j, int n) {
  const int lo = std::min(i, j), hi = std::max(i, j);
  const int gap = hi - lo;
  if (2 * gap > n) return {hi, lo};
  return {lo, hi};
}

/// Number of pairs whose oriented coordinate is positive in this ordering.
inline int positive_oriented_pairs(std::span<const int> ordering) {
  const int n = static_cast<int>(ordering.size());
  std::vector<int> rank(n + 1);
  for (int r = 0; r < n; ++r) rank[ordering[r]] = r;
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto [a, b] = oriented_pair(i, j, n);
      if (rank[a] < rank[b]) ++count;
    }
  }
  return count;
}

/// Factor picked up by the coefficient when the particles at positions
/// `position` and `position + 1` of the ordering swap places.
inline complex crossing_factor(complex eta, std::span<const int> ordering, std::size_t position) {
  const int upper = ordering[position], lower = ordering[position + 1];
  const int n = static_cast<int>(ordering.size());
  const auto [a, b] = oriented_pair(upper, lower, n);
  // Before the swap `upper` has the larger coordinate.
  const bool oriented_goes_negative = (a == upper && b == lower);
  return oriented_goes_negative ? 1.0 / eta : eta;
}

/// Coefficient of an ordering obtained by propagating from the identity
/// ordering (gauge C = 1) with the pair orientation above.
inline complex propagated_coefficient(complex eta, std::span<const int> ordering) {
  std::vector<int> identity(ordering.size());
  std::iota(identity.begin(), identity.end(), 1);
  const int power = positive_oriented_pairs(ordering) - positive_oriented_pairs(identity);
  complex c{1.0, 0.0};
  const complex step = power >= 0 ? eta : 1.0 / eta;
  for (int k = 0; k < std::abs(power); ++k) c *= step;
  return c;
}

inline double nbody_energy(double kappa, double mass, int n) {
  const double nn = static_cast<double>(n);
  return -kappa * kappa * nn * (nn * nn - 1.0) / (12.0 * mass);
}

/// One N-body state per two-body bound level, lowest energy first. Levels are
/// assumed not to cross as parameters vary.
inline std::vector<NBodyBoundState> nbody_bound_states(const InteractionParams& p, int n,
                                                       int max_n = kDefaultMaxParticles) {
  if (n < 2) throw InvalidArgument("need at least two particles");
  if (n > max_n) throw InvalidArgument("particle count " + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
  std::vector<NBodyBoundState> out;
  for (const auto& level : bound_spectrum(p)) {
    NBodyBoundState s;
    s.n = n;
    s.kappa = level.kappa;
    s.energy = nbody_energy(level.kappa, p.mass(), n);
    s.mass = p.mass();
    s.eta = level.eta;
    s.c_even = 1.0;
    s.c_odd = 1.0 / level.eta;
    s.branch = level.branch;
    s.parity_consistent = n <= 3 || std::abs(level.eta * level.eta - 1.0) <= 1e-12;
    out.push_back(s);
  }
  return out;
}

/// (sum over pairs of |x_i - x_j|) / sqrt 2.
inline double pair_distance_sum(std::span<const double> coords) {
  double sum = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = i + 1; j < coords.size(); ++j) sum += std::abs(coords[i] - coords[j]);
  }
  return sum / std::sqrt(2.0);
}

/// True when at least three particles lie within `radius` of each other,
/// where the pairwise boundary analysis does not apply.
inline bool near_triple_coincidence(std::span<const double> coords, double radius = 1e-6) {
  std::vector<double> sorted(coords.begin(), coords.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 2 < sorted.size(); ++i) {
    if (sorted[i + 2] - sorted[i] < radius) return true;
  }
  return false;
}

namespace detail {
inline void check_arity(const NBodyBoundState& s, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != s.n) {
    throw InvalidArgument("expected " + std::to_string(s.n) + " coordinates, got " + std::to_string(coords.size()));
  }
}
}  // namespace detail

inline complex eval_nbody_wavefunction(const NBodyBoundState& s, std::span<const double> coords) {
  detail::check_arity(s, coords);
  const auto config = configuration_of(coords);
  return s.coefficient(config.parity) * std::exp(-s.kappa * pair_distance_sum(coords));
}

/// One-sided limit on the hyperplane x_first = x_second, from the side x_first > x_second.
inline complex eval_nbody_wavefunction(const NBodyBoundState& s, std::span<const double> coords, BoundarySide side) {
  detail::check_arity(s, coords);
  const auto config = configuration_of(coords, side);
  return s.coefficient(config.parity) * std::exp(-s.kappa * pair_distance_sum(coords));
}

/// Every ordering (lexicographic) with its coefficient. Only for n <= 6.
inline std::vector<std::pair<std::vector<int>, complex>> coefficient_table(const NBodyBoundState& s) {
  if (s.n > 6) throw InvalidArgument("explicit coefficient table is limited to n <= 6");
  std::vector<int> ordering(s.n);
  std::iota(ordering.begin(), ordering.end(), 1);
  std::vector<std::pair<std::vector<int>, complex>> table;
  do {
    table.emplace_back(ordering, s.coefficient(permutation_parity(ordering)));
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return table;
}

enum class Symmetry { symmetric, antisymmetric, none };

inline std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::antisymmetric: return "antisymmetric";
    case Symmetry::none: return "none";
  }
  return "?";
}

/// Total (anti)symmetry under particle exchange: eta = 1 gives equal
/// coefficients everywhere, eta = -1 flips the sign with the parity.
inline Symmetry symmetry_class(const NBodyBoundState& s) {
  if (std::abs(s.eta - 1.0) <= 1e-12) return Symmetry::symmetric;
  if (std::abs(s.eta + 1.0) <= 1e-12) return Symmetry::antisymmetric;
  return Symmetry::none;
}

/// Delta-function reference in terms of the "true" two-body strength g0 of
/// V(x_i - x_j) = g0 delta(x_i - x_j).
struct McGuireReference {
  double kappa = 0.0;
  double energy = 0.0;
};

/// g of V(x) = g delta(x) in the scaled coordinate x = (x1 - x2)/sqrt 2.
inline double g_from_g0(double g0) { return g0 / std::sqrt(2.0); }
/// g0 from McGuire's coupling (units with m = 1).
inline double g0_from_mcguire(double g_mg) { return -g_mg / std::sqrt(2.0); }
/// g0 from the coupling used with m = 1/2 in the normalization literature.
inline double g0_from_cd(double g_cd) { return -g_cd; }

inline McGuireReference mcguire_reference(double g0, double mass, int n) {
  if (!(g0 < 0.0)) throw NonBinding("delta-function strength g0 must be negative to bind");
  if (!(mass > 0.0)) throw NonPositiveMass("mass must be positive");
  if (n < 2) throw InvalidArgument("need at least two particles");
  const double nn = static_cast<double>(n);
  return {-g0 * mass / std::sqrt(2.0), -g0 * g0 * mass * nn * (nn * nn - 1.0) / 24.0};
}

}  // namespace pointfam
