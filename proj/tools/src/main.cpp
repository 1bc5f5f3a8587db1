// switchrate: certified convergence rates for switched dynamical systems
// under dwell-time switching.
//
// Exit codes: 0 success, 2 input or parse error, 3 certification failure,
// 4 numerical error, 5 bound violation during verification, 1 unexpected.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "switchrate/builtin.hpp"
#include "switchrate/integrate.hpp"
#include "switchrate/io.hpp"
#include "switchrate/lyapunov.hpp"
#include "switchrate/rates.hpp"
#include "switchrate/signals.hpp"
#include "switchrate/subsystem.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace switchrate;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitInput = 2;
constexpr int kExitCertification = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitViolation = 5;

struct GridSpec {
  std::vector<double> values;
};

// "a:b:n" with an optional ",log" suffix; n = 1 collapses to {a}.
std::vector<double> parse_grid(const std::string& text) {
  std::string body = text;
  bool log_spaced = false;
  if (const auto comma = body.find(','); comma != std::string::npos) {
    const std::string tag = body.substr(comma + 1);
    body = body.substr(0, comma);
    if (tag == "log") {
      log_spaced = true;
    } else {
      throw InputError("grid: unknown tag \"" + tag + "\" (expected \"log\")");
    }
  }
  const auto c1 = body.find(':');
  const auto c2 = body.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw InputError("grid: expected a:b:n[,log], got \"" + text + "\"");
  }
  double a = 0.0, b = 0.0;
  long n = 0;
  try {
    a = std::stod(body.substr(0, c1));
    b = std::stod(body.substr(c1 + 1, c2 - c1 - 1));
    n = std::stol(body.substr(c2 + 1));
  } catch (const std::exception&) {
    throw InputError("grid: malformed numbers in \"" + text + "\"");
  }
  if (n < 1) throw InputError("grid: need n >= 1");
  if (b < a) throw InputError("grid: need b >= a");
  if (log_spaced && a <= 0.0) throw InputError("grid: log spacing needs a > 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(a);
    return out;
  }
  for (long k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n - 1);
    out.push_back(log_spaced ? a * std::pow(b / a, t) : a + t * (b - a));
  }
  return out;
}

GainMethod parse_method(const std::string& m) {
  return m == "sphere" ? GainMethod::SphereSearch : GainMethod::ExactSvd;
}

fs::path prepare_out_dir(const std::string& out) {
  fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw InputError("cannot create output directory: " + dir.string());
  }
  return dir;
}

void announce(const fs::path& p) { std::cout << "wrote " << p.string() << "\n"; }

// Hypothesis report: Hurwitz spectra, sampled weak-Lyapunov decrease, the
// exact linearization inequality, and (polynomial kinds) the agreement of
// the stored linearization with finite differences.
int run_check(const SwitchedSystem& sys, int samples, std::uint64_t seed,
              const fs::path& out_dir) {
  WeakLyapunovOptions wopts;
  wopts.sphere_samples = samples;
  wopts.seed = seed;
  const auto weak = check_weak_lyapunov(sys, wopts);
  const auto lin = check_linearization_lyapunov(sys);

  json j;
  j["type"] = "hypothesis-check";
  j["version"] = version();
  j["lyapunov_type"] =
      std::holds_alternative<QuadraticForm>(sys.lyapunov) ? "quadratic"
                                                          : "polynomial";
  bool all_hold = true;
  json subs = json::array();
  for (std::size_t i = 0; i < sys.subsystems.size(); ++i) {
    const auto& s = sys.subsystems[i];
    const auto spec = is_hurwitz(s.jacobian_at_origin());
    json e;
    e["index"] = i + 1;
    e["hurwitz"] = spec.hurwitz;
    e["abscissa"] = spec.abscissa;
    e["weak_lyapunov"] = {{"holds", weak[i].holds},
                          {"worst_value", weak[i].worst_value},
                          {"tolerance", weak[i].tolerance},
                          {"samples", weak[i].samples}};
    e["linearization_lyapunov"] = {{"holds", lin[i].holds},
                                   {"max_value", lin[i].max_value},
                                   {"tolerance", lin[i].tolerance}};
    if (s.kind() == SubsystemKind::Polynomial) {
      e["jacobian_fd_deviation"] = jacobian_origin_fd_deviation(s, 1e-5);
    }
    all_hold = all_hold && spec.hurwitz && weak[i].holds && lin[i].holds;
    subs.push_back(std::move(e));
  }
  j["subsystems"] = std::move(subs);
  j["all_hold"] = all_hold;

  const fs::path out = out_dir / "check.json";
  std::ofstream f(out, std::ios::binary);
  f << j.dump(2) << "\n";
  if (!f) throw InputError("cannot write file: " + out.string());
  announce(out);
  if (!all_hold) {
    std::cerr << "hypothesis check failed; see " << out.string() << "\n";
    return kExitCertification;
  }
  return kExitOk;
}

int run_verify(const SwitchedSystem& sys, double delta,
               std::optional<double> R, int trials, double horizon,
               GainMethod method, int samples, std::uint64_t seed,
               const fs::path& out_dir) {
  VerifyOptions vopts;
  vopts.trials = trials;
  vopts.horizon_mult = horizon / delta;
  vopts.seed = seed;

  VerificationReport rep;
  std::string kind;
  if (R) {
    NonlinearConfig cfg;
    cfg.sphere_samples = samples;
    cfg.seed = seed;
    const auto cert = compute_nonlinear_certificate(sys, delta, *R, cfg);
    rep = verify_nonlinear_bound(sys, cert, vopts);
    kind = "nonlinear";
  } else {
    GainSearchOptions gopts;
    gopts.samples = samples;
    gopts.seed = seed;
    const auto cert = compute_M(sys, delta, method, gopts);
    rep = verify_homogeneous_bound(sys, cert, vopts);
    kind = "homogeneous";
  }

  const fs::path out = out_dir / "verify_report.json";
  std::ofstream f(out, std::ios::binary);
  f << report_to_json(rep, kind);
  if (!f) throw InputError("cannot write file: " + out.string());
  announce(out);
  std::cout << "trials " << rep.trials << ", points " << rep.points_checked
            << ", violations " << rep.violations << ", max ratio "
            << format_double(rep.max_ratio) << "\n";
  return rep.passed() ? kExitOk : kExitViolation;
}

int run_demo_slow(const SwitchedSystem& sys,
                  std::optional<SwitchingSignal> maybe_u, double settle,
                  const fs::path& out_dir) {
  const std::vector<double> T_grid = {0.0, 1.0, 2.0, 5.0, 10.0, 20.0};
  const double max_T = T_grid.back();
  SwitchingSignal u =
      maybe_u ? *maybe_u
              : generate_regular(static_cast<int>(sys.subsystems.size()), 0.01,
                                 max_T + 1.0);
  if (u.horizon() < max_T) {
    throw InputError("demo-slow: the signal horizon must reach T = " +
                     format_double(max_T));
  }
  const double settle_horizon = std::max(settle, u.horizon());
  Vec x0(sys.dimension());
  x0.setZero();
  x0(0) = 1.0;
  const auto rows = slow_convergence_demo(sys, u, x0, T_grid, 1, settle_horizon);
  const fs::path out = out_dir / "slow_convergence.csv";
  save_slow_convergence_csv(rows, out);
  announce(out);
  return kExitOk;
}

int run_example(std::uint64_t seed, const fs::path& out_dir) {
  const auto sys = builtin_two_spiral_system();

  const fs::path system_path = out_dir / "example_system.json";
  save_system(sys, system_path);
  announce(system_path);
  const auto reloaded = load_system(system_path);  // round-trip sanity

  int rc = run_check(reloaded, 4096, seed, out_dir);
  if (rc != kExitOk) return rc;

  const double delta = 1.0;
  GainSearchOptions gopts;
  gopts.seed = seed;
  const auto cert = compute_M(reloaded, delta, GainMethod::ExactSvd, gopts);
  {
    const fs::path out = out_dir / "certificate_homogeneous.json";
    std::ofstream f(out, std::ios::binary);
    f << certificate_to_json(cert);
    if (!f) throw InputError("cannot write file: " + out.string());
    announce(out);
  }
  std::cout << "M(" << format_double(delta) << ") = " << format_double(cert.M)
            << "\n";

  save_m_curve_csv(
      m_delta_curve(reloaded, parse_grid("0.05:10:50,log"), GainMethod::ExactSvd,
                    gopts),
      out_dir / "M_of_delta.csv");
  announce(out_dir / "M_of_delta.csv");

  {
    const std::vector<double> deltas = {0.5, 1.0, 2.0, 4.0};
    std::vector<double> Ms;
    for (double d : deltas) {
      Ms.push_back(compute_M(reloaded, d, GainMethod::ExactSvd, gopts).M);
    }
    std::vector<double> t_grid;
    for (int k = 0; k <= 300; ++k) t_grid.push_back(0.05 * k);
    save_beta_curve_csv(deltas, Ms, t_grid, out_dir / "beta_of_t.csv");
    announce(out_dir / "beta_of_t.csv");
  }

  VerifyOptions vopts;
  vopts.trials = 200;
  vopts.seed = seed;
  const auto rep = verify_homogeneous_bound(reloaded, cert, vopts);
  {
    const fs::path out = out_dir / "verify_report.json";
    std::ofstream f(out, std::ios::binary);
    f << report_to_json(rep, "homogeneous");
    if (!f) throw InputError("cannot write file: " + out.string());
    announce(out);
  }
  if (!rep.passed()) {
    std::cerr << "homogeneous bound violated in " << rep.violations
              << " points\n";
    return kExitViolation;
  }

  const auto cubic = builtin_cubic_damped_system();
  NonlinearConfig ncfg;
  ncfg.seed = seed;
  const auto ncert = compute_nonlinear_certificate(cubic, delta, 4.0, ncfg);
  {
    const fs::path out = out_dir / "certificate_nonlinear.json";
    std::ofstream f(out, std::ios::binary);
    f << certificate_to_json(ncert);
    if (!f) throw InputError("cannot write file: " + out.string());
    announce(out);
  }
  VerifyOptions nvopts;
  nvopts.trials = 100;
  nvopts.seed = seed;
  const auto nrep = verify_nonlinear_bound(cubic, ncert, nvopts);
  {
    const fs::path out = out_dir / "verify_nonlinear_report.json";
    std::ofstream f(out, std::ios::binary);
    f << report_to_json(nrep, "nonlinear");
    if (!f) throw InputError("cannot write file: " + out.string());
    announce(out);
  }
  if (!nrep.passed()) {
    std::cerr << "nonlinear bound violated in " << nrep.violations
              << " points\n";
    return kExitViolation;
  }

  rc = run_demo_slow(reloaded, std::nullopt, 30.0, out_dir);
  if (rc != kExitOk) return rc;

  {
    const auto u = generate_dwell_time(seed, 2, delta, 20.0);
    Vec x0(2);
    x0 << 1.0, 0.0;
    const auto tr = simulate_switched(reloaded, u, x0, 20.0, {}, 0.1);
    save_trajectory_csv(tr, reloaded, out_dir / "trajectory.csv");
    announce(out_dir / "trajectory.csv");
  }
  std::cout << "example pipeline complete\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "switchrate: certified exponential convergence rates for switched "
      "dynamical systems under dwell-time switching"};
  app.require_subcommand(1);

  std::string system_path, signal_path, out = ".", grid_text;
  std::string method_text = "exact";
  double delta = 1.0, R = 0.0, horizon = 0.0;
  int trials = 1000, samples = 4096;
  std::uint64_t seed = 42;
  bool has_R = false;

  const auto add_system = [&](CLI::App* sub) {
    sub->add_option("--system", system_path, "system description JSON")
        ->required()
        ->check(CLI::ExistingFile);
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "base seed for all derived randomness");
    sub->add_option("--out", out, "output directory (created if missing)");
  };

  auto* check = app.add_subcommand(
      "check", "verify the stability hypotheses and write check.json");
  add_system(check);
  add_common(check);
  check->add_option("--samples", samples, "sphere samples per check");

  auto* simulate = app.add_subcommand(
      "simulate", "integrate a switched trajectory and write trajectory.csv");
  add_system(simulate);
  add_common(simulate);
  simulate->add_option("--signal", signal_path, "switching signal JSON")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--horizon", horizon,
                       "simulation horizon (default: signal horizon)");

  auto* certh = app.add_subcommand(
      "certify-homogeneous",
      "compute the dwell-time contraction certificate M(delta)");
  add_system(certh);
  add_common(certh);
  certh->add_option("--delta", delta, "dwell time")->required();
  certh->add_option("--method", method_text, "exact | sphere")
      ->check(CLI::IsMember({"exact", "sphere"}));
  certh->add_option("--samples", samples, "sphere-search sample count");

  auto* certn = app.add_subcommand(
      "certify-nonlinear",
      "compute the two-region certificate (m1, r1, r, m2, alpha, gamma)");
  add_system(certn);
  add_common(certn);
  certn->add_option("--delta", delta, "dwell time")->required();
  certn->add_option("--R", R, "certified sublevel height {V <= R}")->required();
  certn->add_option("--samples", samples, "sphere sample count");

  auto* mcurve = app.add_subcommand(
      "m-curve", "tabulate M(delta) over a grid into M_of_delta.csv");
  add_system(mcurve);
  add_common(mcurve);
  mcurve->add_option("--delta-grid", grid_text, "a:b:n[,log]")->required();
  mcurve->add_option("--method", method_text, "exact | sphere")
      ->check(CLI::IsMember({"exact", "sphere"}));
  mcurve->add_option("--samples", samples, "sphere-search sample count");

  auto* bcurve = app.add_subcommand(
      "beta-curve", "tabulate beta(1, t) per delta into beta_of_t.csv");
  add_system(bcurve);
  add_common(bcurve);
  bcurve->add_option("--delta-grid", grid_text, "a:b:n[,log]")->required();
  bcurve->add_option("--horizon", horizon, "largest t (default 15)");

  auto* verify = app.add_subcommand(
      "verify", "recompute a certificate and Monte-Carlo check its bound");
  add_system(verify);
  add_common(verify);
  verify->add_option("--delta", delta, "dwell time")->required();
  verify->add_option("--R", R, "nonlinear path: sublevel height")
      ->each([&](const std::string&) { has_R = true; });
  verify->add_option("--trials", trials, "Monte-Carlo trials");
  verify->add_option("--horizon", horizon, "horizon (default 20*delta)");
  verify->add_option("--method", method_text, "exact | sphere")
      ->check(CLI::IsMember({"exact", "sphere"}));
  verify->add_option("--samples", samples, "sampling budget");

  auto* demo = app.add_subcommand(
      "demo-slow",
      "constant-tail construction: time to half V versus tail start T");
  add_system(demo);
  add_common(demo);
  demo->add_option("--signal", signal_path, "switching signal JSON")
      ->check(CLI::ExistingFile);
  demo->add_option("--horizon", horizon, "settle horizon (default 30)");

  auto* example = app.add_subcommand(
      "example", "write the built-in two-matrix system and run every stage");
  add_common(example);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const fs::path out_dir = prepare_out_dir(out);

    if (*check) {
      return run_check(load_system(system_path), samples, seed, out_dir);
    }
    if (*simulate) {
      const auto sys = load_system(system_path);
      const auto u = load_signal(signal_path);
      const double h = horizon > 0.0 ? horizon : u.horizon();
      Vec x0(sys.dimension());
      x0.setZero();
      x0(0) = 1.0;
      const auto tr = simulate_switched(sys, u, x0, h, {}, 0.1);
      save_trajectory_csv(tr, sys, out_dir / "trajectory.csv");
      announce(out_dir / "trajectory.csv");
      return kExitOk;
    }
    if (*certh) {
      const auto sys = load_system(system_path);
      GainSearchOptions gopts;
      gopts.samples = samples;
      gopts.seed = seed;
      const auto cert = compute_M(sys, delta, parse_method(method_text), gopts);
      const fs::path p = out_dir / "certificate_homogeneous.json";
      std::ofstream f(p, std::ios::binary);
      f << certificate_to_json(cert);
      if (!f) throw InputError("cannot write file: " + p.string());
      announce(p);
      std::cout << "M(" << format_double(delta) << ") = "
                << format_double(cert.M) << "\n";
      return kExitOk;
    }
    if (*certn) {
      const auto sys = load_system(system_path);
      NonlinearConfig cfg;
      cfg.sphere_samples = samples == 4096 ? 512 : samples;
      cfg.seed = seed;
      const auto cert = compute_nonlinear_certificate(sys, delta, R, cfg);
      const fs::path p = out_dir / "certificate_nonlinear.json";
      std::ofstream f(p, std::ios::binary);
      f << certificate_to_json(cert);
      if (!f) throw InputError("cannot write file: " + p.string());
      announce(p);
      std::cout << "alpha = " << format_double(cert.alpha)
                << ", gamma = " << format_double(cert.gamma) << "\n";
      return kExitOk;
    }
    if (*mcurve) {
      const auto sys = load_system(system_path);
      GainSearchOptions gopts;
      gopts.samples = samples;
      gopts.seed = seed;
      const auto curve = m_delta_curve(sys, parse_grid(grid_text),
                                       parse_method(method_text), gopts);
      save_m_curve_csv(curve, out_dir / "M_of_delta.csv");
      announce(out_dir / "M_of_delta.csv");
      return kExitOk;
    }
    if (*bcurve) {
      const auto sys = load_system(system_path);
      const auto deltas = parse_grid(grid_text);
      std::vector<double> Ms;
      for (double d : deltas) Ms.push_back(compute_M(sys, d).M);
      const double h = horizon > 0.0 ? horizon : 15.0;
      std::vector<double> t_grid;
      for (int k = 0; k <= 300; ++k) t_grid.push_back(h * k / 300.0);
      save_beta_curve_csv(deltas, Ms, t_grid, out_dir / "beta_of_t.csv");
      announce(out_dir / "beta_of_t.csv");
      return kExitOk;
    }
    if (*verify) {
      const auto sys = load_system(system_path);
      const double h = horizon > 0.0 ? horizon : 20.0 * delta;
      return run_verify(sys, delta,
                        has_R ? std::optional<double>(R) : std::nullopt, trials,
                        h, parse_method(method_text),
                        samples == 4096 && has_R ? 512 : samples, seed,
                        out_dir);
    }
    if (*demo) {
      const auto sys = load_system(system_path);
      std::optional<SwitchingSignal> u;
      if (!signal_path.empty()) u = load_signal(signal_path);
      return run_demo_slow(sys, std::move(u), horizon > 0.0 ? horizon : 30.0,
                           out_dir);
    }
    if (*example) {
      return run_example(seed, out_dir);
    }
    return kExitUnexpected;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed at stage \"" << e.stage() << "\"";
    if (e.subsystem_index() >= 0) {
      std::cerr << " (subsystem " << e.subsystem_index() + 1 << ")";
    }
    std::cerr << ": " << e.what() << "\n";
    return kExitCertification;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}
