// Three-body bound states of the two-level interaction and their exchange
// symmetry.
#include <array>
#include <cstdio>

#include "pointfam/pointfam.hpp"

using namespace pointfam;

int main() {
  const auto p = validate_params({-2.0, 3.0, -2.0, 1.0, 0.0, 0.5});
  const std::array<double, 3> a{0.7, -0.1, -0.5};
  const std::array<double, 3> swapped{-0.1, 0.7, -0.5};
  for (const auto& s : nbody_bound_states(p, 3)) {
    const complex psi = eval_nbody_wavefunction(s, a);
    const complex psi_swapped = eval_nbody_wavefunction(s, swapped);
    std::printf("kappa=%.3f  E=%.3f  %-13s  psi=%.6f  psi(1<->2)=%.6f\n", s.kappa, s.energy,
                std::string(to_string(symmetry_class(s))).c_str(), psi.real(), psi_swapped.real());
  }
}
