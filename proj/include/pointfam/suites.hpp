#pragma once

// Canned oracle-vs-closed-form suites behind `pointfam verify`.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "pointfam/diffraction.hpp"
#include "pointfam/many_body.hpp"
#include "pointfam/one_body.hpp"
#include "pointfam/parallel.hpp"
#include "pointfam/sampling.hpp"
#include "pointfam/scattering.hpp"
#include "pointfam/verify.hpp"

namespace pointfam::suites {

using verify::ResidualReport;

struct NamedParams {
  std::string name;
  InteractionParams params;
};

/// Fixed parameter sets exercised by every suite.
inline std::vector<NamedParams> stock_params() {
  return {
      {"delta g=-2 m=0.5", canonical_interaction(InteractionKind::delta, -2.0, 0.5)},
      {"anti-delta g=-2 m=0.5", canonical_interaction(InteractionKind::anti_delta, -2.0, 0.5)},
      {"delta-prime c=-4 m=1", canonical_interaction(InteractionKind::delta_prime, -4.0, 1.0)},
      {"two-level theta=0", validate_params({-2.0, 3.0, -2.0, 1.0, 0.0, 0.5})},
      {"two-level theta=0.7", validate_params({-2.0, 3.0, -2.0, 1.0, 0.7, 0.5})},
      {"asymmetric two-level", validate_params({-3.0, 1.0, -1.0, 2.0, 0.3, 0.8})},
  };
}

inline std::vector<InteractionParams> random_params(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<InteractionParams> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw_valid_params(rng));
  return out;
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline std::vector<ResidualReport> bound_suite(unsigned threads = 0) {
  auto sets = random_params(1000, 2024);
  for (const auto& s : stock_params()) sets.push_back(s.params);

  struct Worst {
    double kappa = 0.0, eta = 0.0, orth = 0.0;
  };
  const auto per = parallel_map<Worst>(sets.size(), threads, [&](std::size_t i) {
    const auto& p = sets[i];
    Worst w;
    const auto states = bound_spectrum(p);
    auto oracle = verify::oracle_bound_kappas(p);
    std::vector<double> closed;
    for (const auto& s : states) closed.push_back(s.kappa);
    std::sort(closed.begin(), closed.end());
    if (closed.size() != oracle.size()) {
      w.kappa = kInf;
    } else {
      for (std::size_t k = 0; k < closed.size(); ++k) {
        w.kappa = std::max(w.kappa, std::abs(closed[k] - oracle[k]) / std::max(1.0, oracle[k]));
      }
    }
    for (const auto& s : states) {
      const double scale = std::max({1.0, std::abs(p.alpha()), std::abs(2.0 * p.beta() * p.mass() / s.kappa)});
      w.eta = std::max(w.eta, std::abs(eta_alpha_form(p, s.kappa) - s.eta) / scale);
    }
    if (states.size() == 2) w.orth = std::abs(orthogonality_sum(states[0], states[1]));
    return w;
  });
  double kappa = 0, eta = 0, orth = 0;
  for (const auto& w : per) {
    kappa = std::max(kappa, w.kappa);
    eta = std::max(eta, w.eta);
    orth = std::max(orth, w.orth);
  }
  const int n = static_cast<int>(sets.size());
  return {verify::make_report("bound kappa vs bracketing oracle", kappa, n, 1e-10),
          verify::make_report("bound eta closed forms agree", eta, n, 1e-12),
          verify::make_report("bound orthogonality sum", orth, n, 1e-12)};
}

inline std::vector<ResidualReport> scatter_suite(unsigned threads = 0) {
  auto sets = random_params(1000, 4048);
  for (const auto& s : stock_params()) sets.push_back(s.params);
  struct Worst {
    double oracle = 0.0, unitarity = 0.0;
  };
  const auto per = parallel_map<Worst>(sets.size(), threads, [&](std::size_t i) {
    Worst w;
    for (int j = 1; j <= 10; ++j) {
      const double k = static_cast<double>(j) - 0.5 * std::sin(static_cast<double>(i + j));
      const auto a = amplitudes(sets[i], k);
      const auto plus = verify::scattering_matching_oracle(sets[i], k, verify::Incidence::plus);
      const auto minus = verify::scattering_matching_oracle(sets[i], k, verify::Incidence::minus);
      w.oracle = std::max({w.oracle, std::abs(plus.t - a.t_plus), std::abs(plus.r - a.r_plus),
                           std::abs(minus.t - a.t_minus), std::abs(minus.r - a.r_minus)});
      w.unitarity = std::max(w.unitarity, unitarity_defect(a));
    }
    return w;
  });
  double oracle = 0, unit = 0;
  for (const auto& w : per) {
    oracle = std::max(oracle, w.oracle);
    unit = std::max(unit, w.unitarity);
  }
  const int n = static_cast<int>(sets.size()) * 10;
  return {verify::make_report("scatter amplitudes vs matching oracle", oracle, n, 1e-12),
          verify::make_report("scatter flux conservation", unit, n, 1e-12)};
}

inline std::vector<ResidualReport> nbody_boundary_suite() {
  std::vector<ResidualReport> out;
  for (const auto& named : stock_params()) {
    for (const auto& s : nbody_bound_states(named.params, 3)) {
      for (auto line : {verify::PairLine::x12, verify::PairLine::x23, verify::PairLine::x31}) {
        auto r = verify::boundary_residual_3body(named.params, s, line, 50, 1e-10);
        r.check_name = "nbody-boundary " + named.name + " " + std::string(to_string(s.branch)) + " " + r.check_name;
        out.push_back(r);
      }
    }
  }
  return out;
}

inline std::vector<ResidualReport> nbody_interior_suite(unsigned threads = 0) {
  struct Job {
    std::string name;
    NBodyBoundState state;
  };
  std::vector<Job> jobs;
  for (const auto& named : stock_params()) {
    for (int n = 2; n <= 5; ++n) {
      for (const auto& s : nbody_bound_states(named.params, n)) {
        jobs.push_back({"nbody-interior " + named.name + " " + std::string(to_string(s.branch)), s});
      }
    }
  }
  auto out = parallel_map<ResidualReport>(jobs.size(), threads, [&](std::size_t i) {
    auto r = verify::interior_residual(jobs[i].state, 100);
    r.check_name = jobs[i].name + " " + r.check_name;
    return r;
  });
  return out;
}

inline std::vector<ResidualReport> diffraction_suite(unsigned threads = 0) {
  std::vector<ResidualReport> out;
  for (const auto& named : stock_params()) {
    const auto scan = no_diffraction_scan(named.params, 10000, PathConvention::equation, threads);
    const bool expected = satisfies_no_diffraction_condition(named.params);
    if (expected) {
      out.push_back(verify::make_report("diffraction residual " + named.name, scan.max_residual, scan.samples,
                                        kNoDiffractionTolerance));
    } else {
      // Violators must show a residual above 1e-6 somewhere: report the
      // shortfall below that level as the residual.
      const double shortfall = scan.max_residual > 1e-6 ? 0.0 : 1e-6 - scan.max_residual;
      out.push_back(verify::make_report("diffraction present " + named.name, shortfall, scan.samples, 0.0));
    }
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bound", "scatter", "nbody-boundary", "nbody-interior", "diffraction"};
  return names;
}

inline std::vector<ResidualReport> run_suite(const std::string& name, unsigned threads = 0) {
  if (name == "bound") return bound_suite(threads);
  if (name == "scatter") return scatter_suite(threads);
  if (name == "nbody-boundary") return nbody_boundary_suite();
  if (name == "nbody-interior") return nbody_interior_suite(threads);
  if (name == "diffraction") return diffraction_suite(threads);
  if (name == "all") {
    std::vector<ResidualReport> all;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, threads);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw InvalidArgument("unknown suite \"" + name + "\"");
}

}  // namespace pointfam::suites
