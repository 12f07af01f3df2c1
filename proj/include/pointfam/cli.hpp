#pragma once

// `pointfam` command-line front end. run() is the whole program minus main(),
// so tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 usage or validation error, 2 verification failure.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pointfam/diffraction.hpp"
#include "pointfam/io.hpp"
#include "pointfam/many_body.hpp"
#include "pointfam/one_body.hpp"
#include "pointfam/parallel.hpp"
#include "pointfam/scattering.hpp"
#include "pointfam/suites.hpp"

namespace pointfam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerifyFailed = 2;

enum class OutputFormat { json, csv };

namespace detail {

using io::Json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline InteractionParams load_params(const std::string& path) { return io::parse_params(read_file(path)); }

inline void emit_json(std::ostream& out, const Json& j) { out << io::dump_json(j) << '\n'; }

inline void emit(std::ostream& out, const io::Table& t, OutputFormat fmt) {
  if (fmt == OutputFormat::csv) {
    out << t.csv();
  } else {
    emit_json(out, t.json());
  }
}

inline std::string report_table(const std::vector<verify::ResidualReport>& reports) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.check_name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(24) << "max_residual"
     << std::setw(10) << "tolerance" << "  " << std::setw(8) << "samples" << "result\n";
  for (const auto& r : reports) {
    char tol[16];
    std::snprintf(tol, sizeof tol, "%.0e", r.tolerance);
    os << std::setw(static_cast<int>(width)) << r.check_name << "  " << std::setw(24)
       << io::format_double(r.max_residual) << std::setw(10) << tol << "  " << std::setw(8) << r.samples
       << (r.passed ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

inline Json report_json(const verify::ResidualReport& r) {
  Json j;
  j["check_name"] = r.check_name;
  j["max_residual"] = r.max_residual;
  j["samples"] = r.samples;
  j["passed"] = r.passed;
  j["tolerance"] = r.tolerance;
  return j;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Json;

  CLI::App app{"Exact bound states, scattering and N-body solutions for 1D point interactions", "pointfam"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string output_name;
  app.add_option("--output", output_name, "Output format (json or csv); each subcommand has its own default")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string params_path;
  const auto add_params = [&](CLI::App* sub) {
    return sub->add_option("--params", params_path, "Parameter JSON {alpha, beta, gamma, delta, theta, mass}")
        ->check(CLI::ExistingFile);
  };

  // params-check
  auto* check_cmd = app.add_subcommand("params-check", "Validate a parameter file or print a named interaction");
  auto* check_params = add_params(check_cmd);
  std::string kind_name;
  double strength = 0.0;
  double kind_mass = 1.0;
  auto* kind_opt = check_cmd
                       ->add_option("--kind", kind_name,
                                    "Named interaction: delta (V = g delta(x)), delta-prime (strength c) or anti-delta "
                                    "(strength g, alpha..delta of the delta potential with signs reversed; binds for "
                                    "g < 0 with kappa = -g m)")
                       ->check(CLI::IsMember({"delta", "delta-prime", "anti-delta"}));
  check_cmd->add_option("--strength", strength, "Strength g or c for --kind")->needs(kind_opt);
  check_cmd->add_option("--mass", kind_mass, "Mass for --kind")->needs(kind_opt);
  check_params->excludes(kind_opt);

  auto* bound_cmd = app.add_subcommand("bound", "One-body bound states");
  add_params(bound_cmd)->required();

  auto* scatter_cmd = app.add_subcommand("scatter", "Transmission and reflection amplitudes over a k range");
  add_params(scatter_cmd)->required();
  std::string k_range;
  scatter_cmd->add_option("--k-range", k_range, "lo:hi:step")->required();

  auto* phase_cmd = app.add_subcommand("phase-diagram", "Bound-state count on an (alpha, gamma) grid");
  double phase_delta = 0.0;
  std::string alpha_range, gamma_range;
  std::optional<double> phase_beta;
  phase_cmd->add_option("--delta", phase_delta, "Fixed delta")->required();
  phase_cmd->add_option("--alpha", alpha_range, "lo:hi:step")->required();
  phase_cmd->add_option("--gamma", gamma_range, "lo:hi:step")->required();
  phase_cmd->add_option("--beta", phase_beta, "Beta; required only on the delta = 0 slice");

  auto* nbody_cmd = app.add_subcommand("nbody", "N-body bound states");
  add_params(nbody_cmd)->required();
  int nbody_n = 3;
  nbody_cmd->add_option("--n", nbody_n, "Particle count")->required();

  auto* eval_cmd = app.add_subcommand("nbody-eval", "Evaluate an N-body wavefunction at points read from CSV");
  add_params(eval_cmd)->required();
  std::size_t state_index = 0;
  std::string points_path;
  eval_cmd->add_option("--state-index", state_index, "Index into the energy-ordered state list (0 = ground)");
  eval_cmd->add_option("--points", points_path, "CSV, one point per row, one column per particle")
      ->required()
      ->check(CLI::ExistingFile);

  const std::map<std::string, PathConvention> conventions{{"equation", PathConvention::equation},
                                                          {"text", PathConvention::text}};
  PathConvention convention = PathConvention::equation;

  auto* diff_cmd = app.add_subcommand("diffraction", "Three-body ray amplitudes at one (k, phi)");
  add_params(diff_cmd)->required();
  double diff_k = 1.0, diff_phi = 0.5;
  diff_cmd->add_option("--k", diff_k, "Total wavenumber")->required();
  diff_cmd->add_option("--phi", diff_phi, "Incidence parameter in (0, pi/3)")->required();
  diff_cmd->add_option("--convention", convention, "Middle reflection suffix: equation (R-) or text (R+)")
      ->transform(CLI::CheckedTransformer(conventions));

  auto* scan_cmd = app.add_subcommand("diffraction-scan", "Largest diffraction residual over quasi-random (k, phi)");
  add_params(scan_cmd)->required();
  int scan_samples = 10000;
  scan_cmd->add_option("--samples", scan_samples, "Number of (k, phi) samples")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--convention", convention, "Middle reflection suffix: equation (R-) or text (R+)")
      ->transform(CLI::CheckedTransformer(conventions));

  auto* verify_cmd = app.add_subcommand("verify", "Run oracle suites; table on stderr, JSON on stdout");
  std::string suite = "all";
  std::vector<std::string> suite_choices = suites::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_choices));

  auto* mcguire_cmd = app.add_subcommand("mcguire", "Delta-function N-body reference values");
  double g0 = -1.0, mg_mass = 1.0;
  int mg_n = 3;
  mcguire_cmd->add_option("--g0", g0, "Pair strength g0 of g0 delta(x_i - x_j)")->required();
  mcguire_cmd->add_option("--mass", mg_mass, "Particle mass");
  mcguire_cmd->add_option("--n", mg_n, "Particle count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pointfam: " << e.what() << '\n';
    return kExitError;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const auto format = [&](OutputFormat fallback) {
    if (output_name.empty()) return fallback;
    return output_name == "csv" ? OutputFormat::csv : OutputFormat::json;
  };
  const unsigned threads = scan_threads();

  try {
    if (sub == check_cmd) {
      InteractionParams p = [&] {
        if (!kind_name.empty()) {
          const auto kind = kind_name == "delta"         ? InteractionKind::delta
                            : kind_name == "delta-prime" ? InteractionKind::delta_prime
                                                         : InteractionKind::anti_delta;
          return canonical_interaction(kind, strength, kind_mass);
        }
        if (params_path.empty()) throw InputError("need --params or --kind");
        return detail::load_params(params_path);
      }();
      if (format(OutputFormat::json) == OutputFormat::csv) {
        io::Table t{{"alpha", "beta", "gamma", "delta", "theta", "mass"},
                    {{p.alpha(), p.beta(), p.gamma(), p.delta(), p.theta(), p.mass()}}};
        out << t.csv();
      } else {
        detail::emit_json(out, io::params_to_json(p));
      }
      return kExitOk;
    }

    if (sub == bound_cmd) {
      const auto p = detail::load_params(params_path);
      io::Table t{{"kappa", "energy", "eta_re", "eta_im"}, {}};
      Json states = Json::array();
      for (const auto& s : bound_spectrum(p)) {
        t.rows.push_back({s.kappa, s.energy, s.eta.real(), s.eta.imag()});
        Json j;
        j["kappa"] = s.kappa;
        j["energy"] = s.energy;
        j["eta_re"] = s.eta.real();
        j["eta_im"] = s.eta.imag();
        states.push_back(j);
      }
      if (format(OutputFormat::json) == OutputFormat::csv) {
        out << t.csv();
      } else {
        Json j;
        j["states"] = states;
        detail::emit_json(out, j);
      }
      return kExitOk;
    }

    if (sub == scatter_cmd) {
      const auto p = detail::load_params(params_path);
      const auto ks = io::parse_range(k_range);
      io::Table t{{"k", "|T|^2", "|R|^2", "re(T+)", "im(T+)", "re(R+)", "im(R+)", "re(R-)", "im(R-)"}, {}};
      for (double k : ks) {
        const auto a = amplitudes(p, k);
        t.rows.push_back({k, std::norm(a.t_plus), std::norm(a.r_plus), a.t_plus.real(), a.t_plus.imag(),
                          a.r_plus.real(), a.r_plus.imag(), a.r_minus.real(), a.r_minus.imag()});
      }
      detail::emit(out, t, format(OutputFormat::csv));
      return kExitOk;
    }

    if (sub == phase_cmd) {
      const auto alphas = io::parse_range(alpha_range);
      const auto gammas = io::parse_range(gamma_range);
      const auto d = phase_diagram_scan(phase_delta, alphas, gammas, phase_beta, threads);
      io::Table t{{"alpha", "gamma", "count"}, {}};
      t.rows.reserve(d.counts.size());
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        for (std::size_t j = 0; j < gammas.size(); ++j) {
          t.rows.push_back({alphas[i], gammas[j], static_cast<double>(d.count(i, j))});
        }
      }
      detail::emit(out, t, format(OutputFormat::csv));
      return kExitOk;
    }

    if (sub == nbody_cmd) {
      const auto p = detail::load_params(params_path);
      Json states = Json::array();
      io::Table t{{"kappa", "energy", "eta_re", "eta_im", "c_even_re", "c_even_im", "c_odd_re", "c_odd_im"}, {}};
      for (const auto& s : nbody_bound_states(p, nbody_n)) {
        Json j;
        j["kappa"] = s.kappa;
        j["energy"] = s.energy;
        j["eta"] = io::complex_json(s.eta);
        j["c_even"] = io::complex_json(s.c_even);
        j["c_odd"] = io::complex_json(s.c_odd);
        j["symmetry"] = std::string(to_string(symmetry_class(s)));
        j["parity_consistent"] = s.parity_consistent;
        states.push_back(j);
        t.rows.push_back({s.kappa, s.energy, s.eta.real(), s.eta.imag(), s.c_even.real(), s.c_even.imag(),
                          s.c_odd.real(), s.c_odd.imag()});
      }
      if (format(OutputFormat::json) == OutputFormat::csv) {
        out << t.csv();
      } else {
        Json j;
        j["states"] = states;
        detail::emit_json(out, j);
      }
      return kExitOk;
    }

    if (sub == eval_cmd) {
      const auto p = detail::load_params(params_path);
      std::ifstream in(points_path);
      if (!in) throw InputError("cannot open \"" + points_path + "\"");
      const auto points = io::read_numeric_csv(in);
      if (points.empty()) throw InputError("no points in \"" + points_path + "\"");
      const int n = static_cast<int>(points.front().size());
      const auto states = nbody_bound_states(p, n);
      if (state_index >= states.size()) {
        throw InvalidArgument("state index " + std::to_string(state_index) + " out of range (" +
                              std::to_string(states.size()) + " bound states)");
      }
      const auto& s = states[state_index];
      io::Table t;
      for (int i = 1; i <= n; ++i) t.header.push_back("x" + std::to_string(i));
      t.header.push_back("re(psi)");
      t.header.push_back("im(psi)");
      for (const auto& pt : points) {
        const complex psi = eval_nbody_wavefunction(s, pt);
        auto row = pt;
        row.push_back(psi.real());
        row.push_back(psi.imag());
        t.rows.push_back(std::move(row));
      }
      detail::emit(out, t, format(OutputFormat::csv));
      return kExitOk;
    }

    if (sub == diff_cmd) {
      const auto p = detail::load_params(params_path);
      const auto kin = ray_kinematics(diff_k, diff_phi);
      const auto r = outgoing_amplitudes(p, kin, convention);
      Json j;
      j["k"] = kin.k;
      j["phi"] = kin.phi;
      j["k1"] = kin.k1;
      j["k2"] = kin.k2;
      j["k3"] = kin.k3;
      j["convention"] = convention == PathConvention::equation ? "equation" : "text";
      j["amp_fig3"] = io::complex_json(r.amp_fig3);
      j["amp_fig4"] = io::complex_json(r.amp_fig4);
      j["residual"] = io::complex_json(r.residual);
      j["residual_norm"] = r.residual_norm;
      j["condition_satisfied"] = satisfies_no_diffraction_condition(p);
      detail::emit_json(out, j);
      return kExitOk;
    }

    if (sub == scan_cmd) {
      const auto p = detail::load_params(params_path);
      const auto s = no_diffraction_scan(p, scan_samples, convention, threads);
      Json j;
      j["max_residual"] = s.max_residual;
      j["verdict"] = s.verdict;
      j["samples"] = s.samples;
      j["tolerance"] = kNoDiffractionTolerance;
      j["convention"] = convention == PathConvention::equation ? "equation" : "text";
      detail::emit_json(out, j);
      return kExitOk;
    }

    if (sub == verify_cmd) {
      const auto reports = suites::run_suite(suite, threads);
      err << detail::report_table(reports);
      bool all = true;
      Json checks = Json::array();
      for (const auto& r : reports) {
        all = all && r.passed;
        checks.push_back(detail::report_json(r));
      }
      Json j;
      j["suite"] = suite;
      j["passed"] = all;
      j["checks"] = checks;
      detail::emit_json(out, j);
      return all ? kExitOk : kExitVerifyFailed;
    }

    if (sub == mcguire_cmd) {
      const auto ref = mcguire_reference(g0, mg_mass, mg_n);
      Json j;
      j["g0"] = g0;
      j["mass"] = mg_mass;
      j["n"] = mg_n;
      j["g"] = g_from_g0(g0);
      j["kappa"] = ref.kappa;
      j["energy"] = ref.energy;
      detail::emit_json(out, j);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << '\n';
    return kExitError;
  }
  err << "pointfam: unhandled subcommand " << name << '\n';
  return kExitError;
}

}  // namespace pointfam::cli
