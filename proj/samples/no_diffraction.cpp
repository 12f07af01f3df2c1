// Diffraction residual of the three-body ray picture for a few interactions.
#include <cstdio>

#include "pointfam/pointfam.hpp"

using namespace pointfam;

int main() {
  const struct {
    const char* name;
    InteractionParams p;
  } cases[] = {
      {"delta", canonical_interaction(InteractionKind::delta, -2.0, 0.5)},
      {"anti-delta", canonical_interaction(InteractionKind::anti_delta, -2.0, 0.5)},
      {"delta-prime", canonical_interaction(InteractionKind::delta_prime, -4.0, 1.0)},
      {"two-level", validate_params({-2.0, 3.0, -2.0, 1.0, 0.0, 0.5})},
  };
  for (const auto& c : cases) {
    const auto scan = no_diffraction_scan(c.p, 2000);
    std::printf("%-12s max residual %.3e  %s\n", c.name, scan.max_residual,
                scan.verdict ? "no diffraction" : "diffracts");
  }
}
