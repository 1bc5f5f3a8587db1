#include "switchrate/rates.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "switchrate/matrix_exp.hpp"
#include "switchrate/parallel.hpp"
#include "switchrate/rng.hpp"
#include "switchrate/sphere.hpp"

namespace switchrate {

namespace {

// Gains this close to 1 are below what one-dwell propagation can resolve in
// doubles; they are clamped to just below 1 and flagged.
constexpr double kResolutionBand =
    256.0 * std::numeric_limits<double>::epsilon();
const double kJustBelowOne = std::nextafter(1.0, 0.0);

struct GainAtOne {
  double value = 0.0;
  bool clamped = false;
};

// Applies the resolution policy. Returns the (possibly clamped) gain;
// `stage` and `index` feed the error when the gain is materially >= 1.
GainAtOne resolve_gain(double g, const char* stage, int index) {
  if (!(g > 0.0) || !std::isfinite(g)) {
    std::ostringstream msg;
    msg << stage << ": gain is not a positive finite number (" << g << ")";
    throw NumericalError(msg.str());
  }
  if (g >= 1.0 + kResolutionBand) {
    std::ostringstream msg;
    msg << stage << ": one-dwell gain " << g
        << " is not < 1; the dwell-time is too short for a contraction";
    throw CertificationError(stage, index, msg.str());
  }
  if (g > 1.0 - kResolutionBand) {
    return {kJustBelowOne, true};
  }
  return {g, false};
}

// Largest singular value (and its right singular vector) of L^T E L^{-T}:
// the operator norm of x -> E x between unit spheres of the norm |L^T x|.
SubsystemGain conjugated_gain(const Mat& E, const Mat& L) {
  const Mat X = (L.transpose() * E).transpose();
  const Mat C =
      Mat(L.triangularView<Eigen::Lower>().solve(X)).transpose();
  Eigen::JacobiSVD<Mat> svd(C, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SubsystemGain g;
  g.value = svd.singularValues()(0);
  g.argmax = L.transpose().triangularView<Eigen::Upper>().solve(
      Vec(svd.matrixV().col(0)));
  return g;
}

Vec gaussian_unit(Rng& rng, int dim) {
  Vec g(dim);
  while (true) {
    for (int j = 0; j < dim; ++j) g(j) = rng.normal();
    const double n = g.norm();
    if (n > 1e-12) return g / n;
  }
}

Mat cholesky_of_quadratic_part(const LyapunovFunction& V) {
  Eigen::LLT<Mat> llt(quadratic_part(V));
  if (llt.info() != Eigen::Success) {
    throw NumericalError("quadratic part of V is not positive definite");
  }
  return llt.matrixL();
}

// Smallest s with V(s x) >= level along the ray, by doubling then bisection.
// Returns the cap when the level is never reached; that only widens the
// sampled region, which is the safe direction for a maximum.
double radial_crossing(const LyapunovFunction& V, const Vec& x_unit,
                       double level, double guess) {
  double hi = std::max(guess, 1e-8);
  int doublings = 0;
  while (value_of(V, hi * x_unit) < level && doublings < 64) {
    hi *= 2.0;
    ++doublings;
  }
  if (value_of(V, hi * x_unit) < level) return hi;
  double lo = 0.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (value_of(V, mid * x_unit) < level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

struct TrialSlot {
  long points = 0;
  long violations = 0;
  double max_ratio = -std::numeric_limits<double>::infinity();
  double worst_time = 0.0;
  std::exception_ptr error;
};

VerificationReport merge_trials(std::vector<TrialSlot>& slots,
                                std::uint64_t seed, double tolerance) {
  for (auto& s : slots) {
    if (s.error) std::rethrow_exception(s.error);
  }
  VerificationReport rep;
  rep.trials = static_cast<int>(slots.size());
  rep.seed = seed;
  rep.tolerance = tolerance;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    rep.points_checked += slots[i].points;
    rep.violations += slots[i].violations;
    if (slots[i].max_ratio > rep.max_ratio) {
      rep.max_ratio = slots[i].max_ratio;
      rep.worst_time = slots[i].worst_time;
      rep.worst_trial = static_cast<int>(i);
    }
  }
  return rep;
}

}  // namespace

std::vector<SubsystemGain> per_subsystem_gain(const SwitchedSystem& sys,
                                              double delta, GainMethod method,
                                              const GainSearchOptions& opts,
                                              const IntegratorConfig& icfg) {
  sys.validate();
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InputError("per_subsystem_gain: delta must be finite and > 0");
  }
  const int d = sys.dimension();
  std::vector<SubsystemGain> gains;
  gains.reserve(sys.subsystems.size());

  if (method == GainMethod::ExactSvd) {
    if (!std::holds_alternative<QuadraticForm>(sys.lyapunov)) {
      throw InputError("per_subsystem_gain: ExactSvd requires a quadratic V");
    }
    const Mat& L = std::get<QuadraticForm>(sys.lyapunov).cholesky_l();
    for (const auto& s : sys.subsystems) {
      if (s.kind() != SubsystemKind::Linear) {
        throw InputError(
            "per_subsystem_gain: ExactSvd requires linear subsystems");
      }
      gains.push_back(conjugated_gain(matrix_exponential(s.matrix(), delta), L));
    }
    return gains;
  }

  for (std::size_t i = 0; i < sys.subsystems.size(); ++i) {
    const Subsystem& s = sys.subsystems[i];
    std::function<double(const Vec&)> f;
    if (s.kind() == SubsystemKind::Linear) {
      // One exponential up front; each sample is then a matrix-vector apply.
      const Mat E = matrix_exponential(s.matrix(), delta);
      f = [&, E](const Vec& u) {
        return lyapunov_norm(sys.lyapunov, E * sphere_point(sys.lyapunov, u));
      };
    } else {
      f = [&](const Vec& u) {
        return lyapunov_norm(
            sys.lyapunov, flow(s, delta, sphere_point(sys.lyapunov, u), icfg));
      };
    }
    const auto res =
        maximize_on_sphere(d, f, opts.samples, opts.refine_iters,
                           derive_seed(opts.seed, "gain-sphere", i));
    SubsystemGain g;
    g.value = res.value;
    g.argmax = sphere_point(sys.lyapunov, res.point);
    gains.push_back(std::move(g));
  }
  return gains;
}

double beta(double M, double delta, double r, double t) {
  if (!(M > 0.0) || !(M < 1.0)) {
    throw InputError("beta: M must be in (0, 1)");
  }
  if (!(delta > 0.0)) throw InputError("beta: delta must be > 0");
  if (r < 0.0 || t < 0.0) throw InputError("beta: r and t must be >= 0");
  // r * min{1, M^{(t - delta)/(2 delta)}}: equals r up to t = delta, then
  // decays geometrically, touching r*M at t = 3 delta.
  const double expo = (t - delta) / (2.0 * delta);
  return r * std::min(1.0, std::exp(std::log(M) * expo));
}

HomogeneousCertificate compute_M(const SwitchedSystem& sys, double delta,
                                 GainMethod method,
                                 const GainSearchOptions& opts) {
  sys.validate();
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InputError("compute_M: delta must be finite and > 0");
  }
  if (!std::holds_alternative<QuadraticForm>(sys.lyapunov)) {
    throw InputError("compute_M: the homogeneous certificate needs a quadratic V");
  }
  for (std::size_t i = 0; i < sys.subsystems.size(); ++i) {
    if (sys.subsystems[i].kind() != SubsystemKind::Linear) {
      throw InputError("compute_M: the homogeneous certificate needs linear subsystems");
    }
    const auto spec = is_hurwitz(sys.subsystems[i].matrix());
    if (!spec.hurwitz) {
      std::ostringstream msg;
      msg << "compute_M: subsystem " << i + 1 << " is not Hurwitz (spectral "
          << "abscissa " << spec.abscissa << " >= 0); no dwell-time makes it "
          << "a contraction";
      throw CertificationError("hurwitz", static_cast<int>(i), msg.str());
    }
  }

  const auto gains = per_subsystem_gain(sys, delta, method, opts);
  HomogeneousCertificate cert;
  cert.delta = delta;
  cert.method = method;
  cert.samples = method == GainMethod::SphereSearch ? opts.samples : 0;
  cert.seed = method == GainMethod::SphereSearch ? opts.seed : 0;
  cert.M = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    const auto g =
        resolve_gain(gains[i].value, "contraction", static_cast<int>(i));
    cert.resolution_limited = cert.resolution_limited || g.clamped;
    cert.per_subsystem_m.push_back(g.value);
    if (g.value > cert.M) {
      cert.M = g.value;
      cert.argmax_point = gains[i].argmax;
    }
  }
  return cert;
}

std::vector<MCurvePoint> m_delta_curve(const SwitchedSystem& sys,
                                       const std::vector<double>& delta_grid,
                                       GainMethod method,
                                       const GainSearchOptions& opts,
                                       double monotonicity_tol) {
  if (delta_grid.empty()) {
    throw InputError("m_delta_curve: empty delta grid");
  }
  std::vector<MCurvePoint> points;
  points.reserve(delta_grid.size());
  for (double delta : delta_grid) {
    const auto cert = compute_M(sys, delta, method, opts);
    points.push_back({delta, cert.M});
  }
  // M(delta) is nonincreasing for a family that contracts between switches;
  // an increase beyond tolerance means the sphere search under-resolved.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].delta < points[b].delta;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& prev = points[order[k - 1]];
    const auto& next = points[order[k]];
    if (next.M > prev.M + monotonicity_tol) {
      std::ostringstream msg;
      msg << "m_delta_curve: M(" << next.delta << ") = " << next.M
          << " exceeds M(" << prev.delta << ") = " << prev.M
          << "; increase the sample count";
      throw NumericalError(msg.str());
    }
  }
  return points;
}

VerificationReport verify_homogeneous_bound(const SwitchedSystem& sys,
                                            const HomogeneousCertificate& cert,
                                            const VerifyOptions& opts,
                                            const IntegratorConfig& icfg) {
  sys.validate();
  if (opts.trials < 1) {
    throw InputError("verify_homogeneous_bound: trials must be >= 1");
  }
  if (!(opts.horizon_mult > 0.0)) {
    throw InputError("verify_homogeneous_bound: horizon_mult must be > 0");
  }
  const double horizon = opts.horizon_mult * cert.delta;
  const double record_dt =
      opts.record_dt > 0.0 ? opts.record_dt : cert.delta / 10.0;
  const int p = static_cast<int>(sys.subsystems.size());
  const int d = sys.dimension();

  std::vector<TrialSlot> slots(static_cast<std::size_t>(opts.trials));
  parallel_for(slots.size(), [&](std::size_t i) {
    TrialSlot& slot = slots[i];
    try {
      const auto u = generate_dwell_time(
          derive_seed(opts.seed, "verify-signal", i), p, cert.delta, horizon,
          opts.signal_law);
      Rng rng(derive_seed(opts.seed, "verify-x0", i));
      const Vec x0 = sphere_point(sys.lyapunov, gaussian_unit(rng, d));
      const double r0 = lyapunov_norm(sys.lyapunov, x0);
      const auto tr = simulate_switched(sys, u, x0, horizon, icfg, record_dt);
      for (int j = 0; j < tr.size(); ++j) {
        const double lhs = lyapunov_norm(sys.lyapunov, tr.states[j]);
        const double bound = beta(cert.M, cert.delta, r0, tr.times[j]);
        ++slot.points;
        const double ratio = lhs / bound;
        if (ratio > slot.max_ratio) {
          slot.max_ratio = ratio;
          slot.worst_time = tr.times[j];
        }
        if (lhs > bound * (1.0 + opts.tolerance)) ++slot.violations;
      }
    } catch (...) {
      slot.error = std::current_exception();
    }
  });
  return merge_trials(slots, opts.seed, opts.tolerance);
}

NonlinearCertificate compute_nonlinear_certificate(const SwitchedSystem& sys,
                                                   double delta, double R,
                                                   const NonlinearConfig& cfg,
                                                   const IntegratorConfig& icfg) {
  sys.validate();
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InputError("compute_nonlinear_certificate: delta must be finite and > 0");
  }
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw InputError("compute_nonlinear_certificate: R must be finite and > 0");
  }
  if (!(cfg.m1_rule > 0.0) || !(cfg.m1_rule < 1.0)) {
    throw InputError("compute_nonlinear_certificate: m1_rule must be in (0, 1)");
  }
  if (cfg.sphere_samples < 8 || cfg.annulus_directions < 8 ||
      cfg.annulus_radial < 2 || cfg.bisection_iters < 4) {
    throw InputError("compute_nonlinear_certificate: sampling budgets too small");
  }
  const int d = sys.dimension();
  const LyapunovFunction& V = sys.lyapunov;

  NonlinearCertificate cert;
  cert.delta = delta;
  cert.R = R;
  cert.sphere_samples = cfg.sphere_samples;
  cert.annulus_directions = cfg.annulus_directions;
  cert.annulus_radial = cfg.annulus_radial;
  cert.seed = cfg.seed;

  // Stage 1: contraction of the linearized flows on the H-unit sphere.
  const Mat L = cholesky_of_quadratic_part(V);
  cert.m = 0.0;
  for (std::size_t i = 0; i < sys.subsystems.size(); ++i) {
    const Mat& B = sys.subsystems[i].jacobian_at_origin();
    const auto spec = is_hurwitz(B);
    if (!spec.hurwitz) {
      std::ostringstream msg;
      msg << "linearization of subsystem " << i + 1
          << " is not Hurwitz (spectral abscissa " << spec.abscissa << ")";
      throw CertificationError("linearization", static_cast<int>(i), msg.str());
    }
    const auto g =
        resolve_gain(conjugated_gain(matrix_exponential(B, delta), L).value,
                     "linearization", static_cast<int>(i));
    cert.resolution_limited = cert.resolution_limited || g.clamped;
    cert.m = std::max(cert.m, g.value);
  }

  // Stage 2: headroom above m for the nonlinear remainder.
  cert.m1 = cert.m + cfg.m1_rule * (1.0 - cert.m);

  // Norm-equivalence radius bounding how far the near-origin analysis reaches.
  const double search_radius =
      cfg.rho_search_radius > 0.0 ? cfg.rho_search_radius : std::sqrt(2.0 * R);
  if (std::holds_alternative<PolynomialForm>(V)) {
    RhoOptions ropts;
    ropts.sphere_samples = cfg.sphere_samples;
    ropts.bisection_iters = cfg.bisection_iters;
    ropts.seed = cfg.seed;
    cert.rho = estimate_rho(std::get<PolynomialForm>(V), search_radius, ropts);
  } else {
    // Quadratic V equals the squared norm, so the equivalence is global.
    cert.rho = search_radius;
  }

  // Stage 3: the radius r1 within which every one-dwell flow contracts the
  // H-norm by at least m1.
  const auto flow_ratio_below_m1 = [&](const Vec& x) {
    const double n0 = lyapunov_norm(V, x);
    for (const auto& s : sys.subsystems) {
      if (lyapunov_norm(V, flow(s, delta, x, icfg)) > cert.m1 * n0) {
        return false;
      }
    }
    return true;
  };
  const auto ball_contracts = [&](double radius,
                                  const std::vector<Vec>& dirs) {
    for (int k = cfg.annulus_radial; k >= 1; --k) {
      const double s =
          radius * static_cast<double>(k) / cfg.annulus_radial;
      for (const Vec& u : dirs) {
        if (!flow_ratio_below_m1(s * sphere_point(V, u))) return false;
      }
    }
    return true;
  };

  // The sphere of radius r1 must still meet {V <= R}, or the sublevel set
  // derived from it would not sit below R.
  const auto r1_dirs = unit_directions(d, cfg.sphere_samples,
                                       derive_seed(cfg.seed, "r1-dirs"));
  double reach_cap = 0.0;
  for (const Vec& u : r1_dirs) {
    reach_cap = std::max(
        reach_cap, radial_crossing(V, sphere_point(V, u), R, search_radius));
  }
  const double hi0 = std::min(cert.rho, reach_cap);

  double r1 = 0.0;
  if (ball_contracts(hi0, r1_dirs)) {
    r1 = hi0;
  } else {
    double lo = 0.0, hi = hi0;
    for (int it = 0; it < cfg.bisection_iters; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (ball_contracts(mid, r1_dirs)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    r1 = lo;
  }
  // Fresh directions guard against a lucky sample set.
  const auto reval_dirs = unit_directions(
      d, cfg.sphere_samples, derive_seed(cfg.seed, "r1-reval"));
  int shrinks = 0;
  while (r1 > 0.0 && shrinks < 8 &&
         !(ball_contracts(r1, reval_dirs) && ball_contracts(r1, r1_dirs))) {
    r1 *= 0.8;
    ++shrinks;
  }
  if (!(r1 > 1e-6 * hi0)) {
    std::ostringstream msg;
    msg << "no contraction ball of radius above " << 1e-6 * hi0
        << " found for m1 = " << cert.m1
        << "; the nonlinear terms dominate at this dwell-time";
    throw CertificationError("r1", -1, msg.str());
  }
  cert.r1 = r1;

  // Stage 4: a sublevel height r with {V <= r} inside the r1-ball. The
  // r1^2/2 term comes from the norm equivalence, the sampled minimum is
  // direct evidence, and r stays strictly below R.
  const auto r_dirs = unit_directions(d, cfg.annulus_directions,
                                      derive_seed(cfg.seed, "r-sphere"));
  double min_v_sphere = std::numeric_limits<double>::infinity();
  for (const Vec& u : r_dirs) {
    min_v_sphere = std::min(min_v_sphere, value_of(V, r1 * sphere_point(V, u)));
  }
  cert.r = std::min({0.5 * r1 * r1, 0.95 * min_v_sphere, 0.95 * R});
  if (!(cert.r > 0.0)) {
    throw CertificationError("r", -1,
                             "sublevel height collapsed to zero; V may not be "
                             "positive definite on the r1 sphere");
  }

  // Stage 5: worst one-dwell V-ratio on the annulus {r <= V <= R}.
  const auto annulus_max_along = [&](const Vec& u) {
    const Vec xu = sphere_point(V, u);
    double s_lo = radial_crossing(V, xu, cert.r, r1);
    double s_hi = radial_crossing(V, xu, R, search_radius);
    if (s_lo > s_hi) std::swap(s_lo, s_hi);
    double worst = 0.0;
    for (int k = 0; k < cfg.annulus_radial; ++k) {
      const double frac =
          cfg.annulus_radial == 1
              ? 0.0
              : static_cast<double>(k) / (cfg.annulus_radial - 1);
      const Vec x = (s_lo + frac * (s_hi - s_lo)) * xu;
      const double v0 = value_of(V, x);
      if (!(v0 > 0.0)) continue;
      for (const auto& s : sys.subsystems) {
        worst = std::max(worst, value_of(V, flow(s, delta, x, icfg)) / v0);
      }
    }
    return worst;
  };
  const auto m2_res = maximize_on_sphere(
      d, annulus_max_along, cfg.annulus_directions, cfg.refine_iters,
      derive_seed(cfg.seed, "m2-sphere"));
  // Mild inflation: an overestimate of m2 only weakens alpha and gamma, an
  // underestimate would void the bound.
  const auto m2 = resolve_gain(m2_res.value, "m2", -1);
  cert.resolution_limited = cert.resolution_limited || m2.clamped;
  cert.m2 = std::min(1.02 * m2.value, kJustBelowOne);

  cert.alpha = 4.0 / (cert.m1 * std::sqrt(cert.m2));
  cert.gamma = std::min(-std::log(cert.m1) / delta,
                        -std::log(cert.m2) / (2.0 * delta));
  return cert;
}

VerificationReport verify_nonlinear_bound(const SwitchedSystem& sys,
                                          const NonlinearCertificate& cert,
                                          const VerifyOptions& opts,
                                          const IntegratorConfig& icfg) {
  sys.validate();
  if (opts.trials < 1) {
    throw InputError("verify_nonlinear_bound: trials must be >= 1");
  }
  if (!(opts.horizon_mult > 0.0)) {
    throw InputError("verify_nonlinear_bound: horizon_mult must be > 0");
  }
  const double horizon = opts.horizon_mult * cert.delta;
  const double record_dt =
      opts.record_dt > 0.0 ? opts.record_dt : cert.delta / 10.0;
  const int p = static_cast<int>(sys.subsystems.size());
  const int d = sys.dimension();
  const LyapunovFunction& V = sys.lyapunov;

  std::vector<TrialSlot> slots(static_cast<std::size_t>(opts.trials));
  parallel_for(slots.size(), [&](std::size_t i) {
    TrialSlot& slot = slots[i];
    try {
      const auto u = generate_dwell_time(
          derive_seed(opts.seed, "nl-verify-signal", i), p, cert.delta,
          horizon, opts.signal_law);
      Rng rng(derive_seed(opts.seed, "nl-verify-x0", i));
      const Vec dir = sphere_point(V, gaussian_unit(rng, d));
      const double reach = radial_crossing(V, dir, cert.R, std::sqrt(2.0 * cert.R));
      const Vec x0 = rng.uniform(0.05, 1.0) * reach * dir;
      const double v0 = value_of(V, x0);
      if (!(v0 > 0.0)) return;
      const auto tr = simulate_switched(sys, u, x0, horizon, icfg, record_dt);
      for (int j = 0; j < tr.size(); ++j) {
        const double lhs = value_of(V, tr.states[j]);
        const double bound =
            std::min(1.0, cert.alpha * std::exp(-cert.gamma * tr.times[j])) *
            v0;
        ++slot.points;
        const double ratio = lhs / bound;
        if (ratio > slot.max_ratio) {
          slot.max_ratio = ratio;
          slot.worst_time = tr.times[j];
        }
        if (lhs > bound * (1.0 + opts.tolerance)) ++slot.violations;
      }
    } catch (...) {
      slot.error = std::current_exception();
    }
  });
  return merge_trials(slots, opts.seed, opts.tolerance);
}

std::vector<SlowConvergenceRow> slow_convergence_demo(
    const SwitchedSystem& sys, const SwitchingSignal& u, const Vec& x0,
    const std::vector<double>& T_grid, int tail_index, double settle_horizon,
    const IntegratorConfig& icfg) {
  sys.validate();
  if (T_grid.empty()) throw InputError("slow_convergence_demo: empty T grid");
  if (!(settle_horizon > 0.0)) {
    throw InputError("slow_convergence_demo: settle_horizon must be > 0");
  }
  const double v0 = value_of(sys.lyapunov, x0);
  if (!(v0 > 0.0)) {
    throw InputError("slow_convergence_demo: V(x0) must be > 0");
  }
  const double target = 0.5 * v0;
  std::vector<SlowConvergenceRow> rows;
  rows.reserve(T_grid.size());
  for (double T : T_grid) {
    if (!(T >= 0.0)) throw InputError("slow_convergence_demo: T must be >= 0");
    const auto tail = constant_tail(u, T, tail_index, T + settle_horizon);
    const auto tr =
        simulate_switched(sys, tail, x0, T + settle_horizon, icfg, 0.01);
    SlowConvergenceRow row;
    row.T = T;
    row.time_to_half = std::numeric_limits<double>::infinity();
    double prev_t = tr.times[0];
    double prev_v = value_of(sys.lyapunov, tr.states[0]);
    for (int j = 1; j < tr.size(); ++j) {
      const double vj = value_of(sys.lyapunov, tr.states[j]);
      if (vj < target) {
        // Linear interpolation of the crossing inside the last record step.
        const double w = (prev_v - target) / (prev_v - vj);
        row.time_to_half = prev_t + w * (tr.times[j] - prev_t);
        break;
      }
      prev_t = tr.times[j];
      prev_v = vj;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace switchrate
