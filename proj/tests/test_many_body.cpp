#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "pointfam/many_body.hpp"
#include "pointfam/sampling.hpp"

using namespace pointfam;

namespace {

constexpr double pi = std::numbers::pi;
const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);

InteractionParams two_level(double theta = 0.0) { return validate_params({-2.0, 3.0, -2.0, 1.0, theta, 0.5}); }

std::vector<double> random_point(std::mt19937_64& rng, int n, double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  return x;
}

auto library_orientation(int n) {
  return [n](int upper, int lower) {
    const auto [a, b] = oriented_pair(upper, lower, n);
    return a == upper && b == lower;
  };
}

}  // namespace

TEST(Jacobi, Examples) {
  const auto j = jacobi_transform(1.0, 1.0, 1.0);
  EXPECT_NEAR(j.x, 0.0, 1e-15);
  EXPECT_NEAR(j.y, 0.0, 1e-15);
  EXPECT_NEAR(j.z, s3, 1e-15);
  const auto k = jacobi_transform(1.0, -1.0, 0.0);
  EXPECT_NEAR(k.x, s2, 1e-15);
  EXPECT_NEAR(k.y, 0.0, 1e-15);
  EXPECT_NEAR(k.z, 0.0, 1e-15);
}

TEST(Jacobi, RoundTripAndLineIdentities) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_point(rng, 3, 5.0);
    const auto j = jacobi_transform(x[0], x[1], x[2]);
    const auto back = cartesian_from_jacobi(j);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(back[k], x[k], 1e-14);
    EXPECT_NEAR((j.x - s3 * j.y) / 2.0, -(x[1] - x[2]) / s2, 1e-14);
    EXPECT_NEAR((j.x + s3 * j.y) / 2.0, -(x[2] - x[0]) / s2, 1e-14);
  }
}

TEST(Jacobi, EnvelopeMatchesPairSum) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_point(rng, 3, 2.0);
    const auto j = jacobi_transform(x[0], x[1], x[2]);
    EXPECT_NEAR(three_body_envelope(j.x, j.y, 0.8), std::exp(-0.8 * pair_distance_sum(x)), 1e-14);
  }
}

TEST(Configuration, Examples) {
  const auto a = configuration_of(std::vector<double>{3.0, 2.0, 1.0});
  EXPECT_EQ(a.ordering, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(a.parity, Parity::even);
  EXPECT_EQ(a.region, 1);

  const auto b = configuration_of(std::vector<double>{2.0, 3.0, 1.0});
  EXPECT_EQ(b.ordering, (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(b.parity, Parity::odd);
  EXPECT_EQ(b.region, 2);

  const auto c = configuration_of(std::vector<double>{0.0, 5.0});
  EXPECT_EQ(c.ordering, (std::vector<int>{2, 1}));
  EXPECT_EQ(c.parity, Parity::odd);
  EXPECT_FALSE(c.region.has_value());
}

TEST(Configuration, RegionsBijectWithOrderings) {
  const std::map<int, std::array<int, 3>> signs{{1, {1, 1, -1}}, {2, {-1, 1, -1}}, {3, {-1, 1, 1}},
                                                {4, {-1, -1, 1}}, {5, {1, -1, 1}}, {6, {1, -1, -1}}};
  std::vector<int> perm{1, 2, 3};
  std::set<int> regions;
  do {
    std::array<double, 3> x{};
    for (int r = 0; r < 3; ++r) x[perm[r] - 1] = 10.0 - r;
    const auto c = configuration_of(x);
    ASSERT_TRUE(c.region.has_value());
    regions.insert(*c.region);
    const auto& s = signs.at(*c.region);
    EXPECT_EQ(x[0] > x[1] ? 1 : -1, s[0]);
    EXPECT_EQ(x[1] > x[2] ? 1 : -1, s[1]);
    EXPECT_EQ(x[2] > x[0] ? 1 : -1, s[2]);
    // Odd-numbered regions are even permutations.
    EXPECT_EQ(c.parity == Parity::even, *c.region % 2 == 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(regions.size(), 6u);
}

TEST(Configuration, ParityMatchesPermutationSign) {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 7; ++n) {
    for (int i = 0; i < 50; ++i) {
      const auto c = configuration_of(random_point(rng, n, 3.0));
      EXPECT_EQ(c.parity == Parity::even, oracle::even_permutation(c.ordering));
    }
  }
}

TEST(Configuration, CoincidenceThrowsUnlessSideGiven) {
  const std::vector<double> x{1.0, 1.0, -2.0};
  EXPECT_THROW(configuration_of(x), OnBoundary);
  EXPECT_EQ(configuration_of(x, {1, 2}).ordering, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(configuration_of(x, {2, 1}).ordering, (std::vector<int>{2, 1, 3}));
  EXPECT_THROW(configuration_of(x, {1, 3}), OnBoundary);
}

TEST(NBodyStates, DeltaThreeBody) {
  const auto states = nbody_bound_states(canonical_interaction(InteractionKind::delta, -2.0, 0.5), 3);
  ASSERT_EQ(states.size(), 1u);
  EXPECT_NEAR(states[0].kappa, 1.0, 1e-12);
  EXPECT_NEAR(states[0].energy, -4.0, 1e-12);
  for (const auto& [ordering, c] : coefficient_table(states[0])) EXPECT_NEAR(std::abs(c - 1.0), 0.0, 1e-12);
  EXPECT_EQ(symmetry_class(states[0]), Symmetry::symmetric);
}

TEST(NBodyStates, TwoLevelThreeBody) {
  const auto states = nbody_bound_states(two_level(), 3);
  ASSERT_EQ(states.size(), 2u);
  EXPECT_NEAR(states[0].kappa, 3.0, 1e-12);
  EXPECT_NEAR(states[0].energy, -36.0, 1e-12);
  EXPECT_NEAR(std::abs(states[0].c_odd - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(states[1].kappa, 1.0, 1e-12);
  EXPECT_NEAR(states[1].energy, -4.0, 1e-12);
  EXPECT_NEAR(std::abs(states[1].c_odd + 1.0), 0.0, 1e-12);
  EXPECT_TRUE(states[0].parity_consistent);
}

TEST(NBodyStates, TwoBodyReducesToOneBody) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 300; ++i) {
    const auto p = draw_valid_params(rng);
    const auto one = bound_spectrum(p);
    const auto two = nbody_bound_states(p, 2);
    ASSERT_EQ(one.size(), two.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
      EXPECT_EQ(two[k].kappa, one[k].kappa);
      EXPECT_NEAR(two[k].energy, one[k].energy, 1e-14 * std::abs(one[k].energy));
    }
  }
}

TEST(NBodyStates, EnergyFormula) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 200; ++i) {
    const auto p = draw_valid_params(rng);
    for (int n = 2; n <= 8; ++n) {
      for (const auto& s : nbody_bound_states(p, n)) {
        EXPECT_NEAR(s.energy, -s.kappa * s.kappa * n * (n * n - 1) / (12.0 * p.mass()),
                    1e-13 * std::abs(s.energy));
        if (n == 3) {
          EXPECT_NEAR(s.energy, -2.0 * s.kappa * s.kappa / p.mass(), 1e-13 * std::abs(s.energy));
        }
      }
    }
  }
}

TEST(NBodyStates, ParticleCountLimits) {
  const auto p = two_level();
  EXPECT_THROW(nbody_bound_states(p, 1), InvalidArgument);
  EXPECT_THROW(nbody_bound_states(p, 9), InvalidArgument);
  EXPECT_NO_THROW(nbody_bound_states(p, 9, 9));
  EXPECT_TRUE(nbody_bound_states(validate_params({2.0, 3.0, 2.0, 1.0, 0.0, 0.5}), 4).empty());
}

TEST(NBodyStates, ParityConsistencyFlag) {
  const auto generic = validate_params({-3.0, 1.0, -1.0, 2.0, 0.3, 0.8});
  for (const auto& s : nbody_bound_states(generic, 3)) EXPECT_TRUE(s.parity_consistent);
  for (const auto& s : nbody_bound_states(generic, 4)) EXPECT_FALSE(s.parity_consistent);
  for (const auto& s : nbody_bound_states(two_level(), 5)) EXPECT_TRUE(s.parity_consistent);
}

TEST(Wavefunction, DeltaThreeBodyValue) {
  const auto s = nbody_bound_states(canonical_interaction(InteractionKind::delta, -2.0, 0.5), 3)[0];
  const std::vector<double> x{1.0, 0.0, -1.0};
  EXPECT_NEAR(std::abs(eval_nbody_wavefunction(s, x) - std::exp(-2.0 * s2 * s.kappa)), 0.0, 1e-15);
}

TEST(Wavefunction, ExcitedStateIsAntisymmetric) {
  std::mt19937_64 rng(46);
  for (int n = 2; n <= 5; ++n) {
    const auto excited = nbody_bound_states(two_level(), n)[1];
    const auto ground = nbody_bound_states(two_level(), n)[0];
    for (int i = 0; i < 100; ++i) {
      auto x = random_point(rng, n, 2.0);
      auto y = x;
      std::swap(y[0], y[n - 1]);
      EXPECT_NEAR(std::abs(eval_nbody_wavefunction(excited, y) + eval_nbody_wavefunction(excited, x)), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(eval_nbody_wavefunction(ground, y) - eval_nbody_wavefunction(ground, x)), 0.0, 1e-14);
    }
  }
}

TEST(Wavefunction, TranslationInvariant) {
  std::mt19937_64 rng(47);
  const auto p = validate_params({-3.0, 1.0, -1.0, 2.0, 0.3, 0.8});
  for (const auto& s : nbody_bound_states(p, 4)) {
    for (int i = 0; i < 100; ++i) {
      auto x = random_point(rng, 4, 2.0);
      auto y = x;
      for (auto& v : y) v += 0.375;
      const complex a = eval_nbody_wavefunction(s, x), b = eval_nbody_wavefunction(s, y);
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-13 * std::abs(a));
    }
  }
}

TEST(Wavefunction, ThetaIndependentDensity) {
  std::mt19937_64 rng(48);
  const auto p = validate_params({-3.0, 1.0, -1.0, 2.0, 0.0, 0.8});
  for (int n = 2; n <= 5; ++n) {
    const auto ref = nbody_bound_states(p, n);
    for (double theta : {0.4, pi}) {
      const auto got = nbody_bound_states(p.with_theta(theta), n);
      ASSERT_EQ(got.size(), ref.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        for (int i = 0; i < 100; ++i) {
          const auto x = random_point(rng, n, 2.0);
          const double a = std::norm(eval_nbody_wavefunction(ref[k], x));
          const double b = std::norm(eval_nbody_wavefunction(got[k], x));
          EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, a));
        }
      }
    }
  }
}

TEST(Wavefunction, OneSidedLimitOnBoundary) {
  const auto s = nbody_bound_states(two_level(), 3)[1];
  const std::vector<double> x{0.5, 0.5, -1.0};
  EXPECT_THROW(eval_nbody_wavefunction(s, x), OnBoundary);
  const complex above = eval_nbody_wavefunction(s, x, {1, 2});
  const complex below = eval_nbody_wavefunction(s, x, {2, 1});
  EXPECT_NEAR(std::abs(above / below - s.eta), 0.0, 1e-14);
}

TEST(Wavefunction, ArityChecked) {
  const auto s = nbody_bound_states(two_level(), 3)[0];
  EXPECT_THROW(eval_nbody_wavefunction(s, std::vector<double>{1.0, 2.0}), InvalidArgument);
}

TEST(Coefficients, ThreeBodyRegionPattern) {
  const auto p = validate_params({-3.0, 1.0, -1.0, 2.0, 0.3, 0.8});
  for (const auto& s : nbody_bound_states(p, 3)) {
    std::map<int, complex> by_region;
    for (const auto& [ordering, c] : coefficient_table(s)) {
      std::array<double, 3> x{};
      for (int r = 0; r < 3; ++r) x[ordering[r] - 1] = 3.0 - r;
      by_region[three_body_region(x[0], x[1], x[2])] = c;
    }
    EXPECT_EQ(by_region[1], by_region[3]);
    EXPECT_EQ(by_region[3], by_region[5]);
    EXPECT_EQ(by_region[2], by_region[4]);
    EXPECT_EQ(by_region[4], by_region[6]);
    EXPECT_NEAR(std::abs(by_region[2] - by_region[1] / s.eta), 0.0, 1e-14);
  }
}

TEST(Coefficients, TableOnlyForSmallN) {
  auto s = nbody_bound_states(two_level(), 7)[0];
  EXPECT_THROW(coefficient_table(s), InvalidArgument);
  s = nbody_bound_states(two_level(), 6)[0];
  EXPECT_EQ(coefficient_table(s).size(), 720u);
}

TEST(Coefficients, ThreeBodyOrientationIsCyclic) {
  EXPECT_EQ(oriented_pair(1, 2, 3), (std::pair{1, 2}));
  EXPECT_EQ(oriented_pair(2, 3, 3), (std::pair{2, 3}));
  EXPECT_EQ(oriented_pair(1, 3, 3), (std::pair{3, 1}));
  EXPECT_EQ(oriented_pair(2, 1, 2), (std::pair{1, 2}));
}

TEST(Coefficients, PropagationIsPathIndependent) {
  std::mt19937_64 rng(49);
  const complex eta = std::polar(1.7, 0.9);
  for (int n = 2; n <= 6; ++n) {
    for (int w = 0; w < 300; ++w) {
      const auto [ordering, c] = oracle::random_walk(n, 1 + w % 40, eta, rng, library_orientation(n));
      EXPECT_NEAR(std::abs(c - propagated_coefficient(eta, ordering)), 0.0, 1e-9 * std::abs(c));
    }
  }
}

TEST(Coefficients, CrossingFactorMatchesOrientation) {
  const complex eta{0.3, 0.4};
  const std::vector<int> ord{2, 4, 1, 3};
  for (std::size_t pos = 0; pos + 1 < ord.size(); ++pos) {
    const bool oriented = library_orientation(4)(ord[pos], ord[pos + 1]);
    EXPECT_EQ(crossing_factor(eta, ord, pos), oriented ? 1.0 / eta : eta);
  }
}

TEST(Coefficients, ParityRuleHoldsUpToThreeBodies) {
  std::mt19937_64 rng(50);
  const complex eta = std::polar(2.3, 0.4);
  for (int n = 2; n <= 3; ++n) {
    for (int w = 0; w < 1000; ++w) {
      const auto [ordering, c] = oracle::random_walk(n, 1 + w % 25, eta, rng, library_orientation(n));
      const complex expected = oracle::even_permutation(ordering) ? complex(1.0) : 1.0 / eta;
      EXPECT_NEAR(std::abs(c - expected), 0.0, 1e-9);
    }
  }
}

TEST(Coefficients, ParityRuleHoldsForUnitEtaSquared) {
  std::mt19937_64 rng(51);
  for (complex eta : {complex(1.0), complex(-1.0)}) {
    for (int n = 2; n <= 5; ++n) {
      for (int w = 0; w < 1000; ++w) {
        const auto [ordering, c] = oracle::random_walk(n, 1 + w % 25, eta, rng, library_orientation(n));
        const complex expected = oracle::even_permutation(ordering) ? complex(1.0) : 1.0 / eta;
        EXPECT_EQ(c, expected);
      }
    }
  }
}

TEST(Coefficients, ParityRuleFailsForFourBodiesWithGenericEta) {
  // Orderings (1,2,3,4) and (2,1,4,3) are both even, yet one is reached
  // from the other by swapping the adjacent pairs (1,2) and (3,4). Under any
  // fixed pair orientation the two crossings give eta^2, eta^-2 or 1; for the
  // library orientation it is not 1.
  const complex eta = std::polar(2.0, 0.3);
  const auto c = oracle::walk_coefficient(eta, {1, 2, 3, 4}, {2, 1, 4, 3}, library_orientation(4));
  EXPECT_GT(std::abs(c - 1.0), 0.1);
  EXPECT_NEAR(std::abs(c - propagated_coefficient(eta, std::vector<int>{2, 1, 4, 3})), 0.0, 1e-12);
}

TEST(Orthogonality, AdjacentRegionPairsVanish) {
  for (const auto& p : {two_level(), two_level(1.1), validate_params({-3.0, 1.0, -1.0, 2.0, 0.3, 0.8})}) {
    const auto s = nbody_bound_states(p, 3);
    ASSERT_EQ(s.size(), 2u);
    const complex sum = std::conj(s[0].c_even) * s[1].c_even + std::conj(s[0].c_odd) * s[1].c_odd;
    EXPECT_NEAR(std::abs(sum), 0.0, 1e-12);
  }
}

TEST(Symmetry, Classification) {
  const auto zero = nbody_bound_states(two_level(0.0), 3);
  EXPECT_EQ(symmetry_class(zero[0]), Symmetry::symmetric);
  EXPECT_EQ(symmetry_class(zero[1]), Symmetry::antisymmetric);
  const auto flipped = nbody_bound_states(two_level(pi), 3);
  EXPECT_EQ(symmetry_class(flipped[0]), Symmetry::antisymmetric);
  EXPECT_EQ(symmetry_class(flipped[1]), Symmetry::symmetric);
  for (const auto& s : nbody_bound_states(validate_params({-3.0, 1.0, -1.0, 2.0, 0.0, 0.8}), 3)) {
    EXPECT_EQ(symmetry_class(s), Symmetry::none);
  }
  EXPECT_EQ(to_string(Symmetry::antisymmetric), "antisymmetric");
}

TEST(Triple, NearCoincidenceFlag) {
  EXPECT_TRUE(near_triple_coincidence(std::vector<double>{0.0, 1e-7, -1e-7, 3.0}));
  EXPECT_FALSE(near_triple_coincidence(std::vector<double>{0.0, 1e-7, 1.0, 3.0}));
}

TEST(McGuire, ReferenceValues) {
  const auto r = mcguire_reference(-s2, 1.0, 3);
  EXPECT_NEAR(r.kappa, 1.0, 1e-15);
  EXPECT_NEAR(r.energy, -2.0, 1e-14);
  const double g0 = -1.3, m = 0.7;
  const auto two = mcguire_reference(g0, m, 2);
  EXPECT_NEAR(two.energy, -g0 * g0 * m / 4.0, 1e-15);
  EXPECT_NEAR(two.energy, -two.kappa * two.kappa / (2.0 * m), 1e-15);
  EXPECT_THROW(mcguire_reference(0.0, 1.0, 3), NonBinding);
  EXPECT_THROW(mcguire_reference(1.0, 1.0, 3), NonBinding);
}

TEST(McGuire, ConventionConversions) {
  EXPECT_NEAR(g_from_g0(-s2), -1.0, 1e-15);
  EXPECT_NEAR(g0_from_mcguire(s2), -1.0, 1e-15);
  EXPECT_EQ(g0_from_cd(2.5), -2.5);
}

TEST(McGuire, AgreesWithNBodyStates) {
  for (double g0 : {-0.5, -s2, -3.0}) {
    for (double m : {0.5, 1.0, 2.0}) {
      const auto p = canonical_interaction(InteractionKind::delta, g_from_g0(g0), m);
      for (int n = 2; n <= 6; ++n) {
        const auto states = nbody_bound_states(p, n);
        ASSERT_EQ(states.size(), 1u);
        const auto ref = mcguire_reference(g0, m, n);
        EXPECT_NEAR(states[0].kappa, ref.kappa, 1e-12 * ref.kappa);
        EXPECT_NEAR(states[0].energy, ref.energy, 1e-12 * std::abs(ref.energy));
      }
    }
  }
}
