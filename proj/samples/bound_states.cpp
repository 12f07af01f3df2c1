// Bound states and scattering for the delta potential and a two-level member.
#include <cstdio>

#include "pointfam/pointfam.hpp"

using namespace pointfam;

static void show(const char* label, const InteractionParams& p) {
  std::printf("%s\n", label);
  for (const auto& s : bound_spectrum(p)) {
    std::printf("  %-6s kappa=%.6f  E=%.6f  eta=(%.6f, %.6f)\n", std::string(to_string(s.branch)).c_str(), s.kappa,
                s.energy, s.eta.real(), s.eta.imag());
  }
  for (double k : {0.5, 1.0, 2.0}) {
    const auto a = amplitudes(p, k);
    std::printf("  k=%.1f  |T|^2=%.6f  |R|^2=%.6f\n", k, std::norm(a.t_plus), std::norm(a.r_plus));
  }
}

int main() {
  show("delta potential, g = -2, m = 0.5", canonical_interaction(InteractionKind::delta, -2.0, 0.5));
  show("two-level, alpha = gamma = -2, beta = 3, delta = 1, m = 0.5", validate_params({-2.0, 3.0, -2.0, 1.0, 0.0, 0.5}));
}
