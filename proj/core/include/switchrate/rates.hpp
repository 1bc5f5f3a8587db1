#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "switchrate/integrate.hpp"
#include "switchrate/lyapunov.hpp"
#include "switchrate/signals.hpp"
#include "switchrate/subsystem.hpp"

namespace switchrate {

enum class GainMethod { ExactSvd, SphereSearch };

struct GainSearchOptions {
  int samples = 4096;
  int refine_iters = 50;
  std::uint64_t seed = 42;
};

/// Worst one-dwell growth of each subsystem flow on the Lyapunov unit
/// sphere: m_i = max { |Phi_i^delta(x)| : |x| = 1 } in the P-norm.
/// ExactSvd (Linear subsystems only) evaluates the conjugated exponential's
/// largest singular value; SphereSearch maximizes over sampled unit vectors
/// with local refinement. Pure maximization: no contraction requirement.
struct SubsystemGain {
  double value = 0.0;
  Vec argmax;  // unit vector (Lyapunov norm) attaining the maximum
};
std::vector<SubsystemGain> per_subsystem_gain(
    const SwitchedSystem& sys, double delta, GainMethod method,
    const GainSearchOptions& opts = {},
    const IntegratorConfig& icfg = {});

/// Dwell-time rate certificate for the homogeneous (linear) path.
struct HomogeneousCertificate {
  double delta = 0.0;
  double M = 0.0;                    // max_i m_i, in (0, 1)
  std::vector<double> per_subsystem_m;
  GainMethod method = GainMethod::ExactSvd;
  Vec argmax_point;                  // P-unit vector attaining M
  int samples = 0;                   // sphere-search metadata (0 for exact)
  std::uint64_t seed = 0;
  /// True when a gain was within measurement resolution of 1 and was clamped
  /// to just below 1; the certificate is then valid but vacuously weak.
  bool resolution_limited = false;
};

/// beta(r, t) = r * min{1, M^{-1/2} * M^{t/(2 delta)}}; class KL in (r, t).
double beta(double M, double delta, double r, double t);

struct RateFunction {
  double delta = 0.0;
  double M = 0.0;
  double operator()(double r, double t) const { return beta(M, delta, r, t); }
};

/// Certifies M(delta) < 1 for an all-Linear system with quadratic V.
/// Fails (CertificationError) if a subsystem is not Hurwitz or a gain is
/// materially >= 1.
HomogeneousCertificate compute_M(const SwitchedSystem& sys, double delta,
                                 GainMethod method = GainMethod::ExactSvd,
                                 const GainSearchOptions& opts = {});

/// (delta, M(delta)) along a grid; checks monotone nonincrease and flags
/// sphere-search under-resolution beyond `monotonicity_tol`.
struct MCurvePoint {
  double delta = 0.0;
  double M = 0.0;
};
std::vector<MCurvePoint> m_delta_curve(const SwitchedSystem& sys,
                                       const std::vector<double>& delta_grid,
                                       GainMethod method = GainMethod::ExactSvd,
                                       const GainSearchOptions& opts = {},
                                       double monotonicity_tol = 1e-9);

/// Monte-Carlo verification report shared by both bound checkers.
struct VerificationReport {
  int trials = 0;
  long points_checked = 0;
  long violations = 0;
  double max_ratio = 0.0;      // max over points of lhs / bound
  double worst_time = 0.0;
  int worst_trial = -1;
  std::uint64_t seed = 0;
  double tolerance = 0.0;

  bool passed() const { return violations == 0; }
};

struct VerifyOptions {
  int trials = 1000;
  double horizon_mult = 20.0;  // horizon = horizon_mult * delta
  double record_dt = 0.0;      // 0: delta / 10
  double tolerance = 1e-8;     // accept lhs <= bound * (1 + tolerance)
  std::uint64_t seed = 42;
  DwellGeneratorOptions signal_law = {};
};

/// Draws dwell-delta signals and P-unit initial states, simulates, and
/// checks |Phi_u^t(x)|_P <= beta(|x|_P, t) at every record point.
VerificationReport verify_homogeneous_bound(const SwitchedSystem& sys,
                                            const HomogeneousCertificate& cert,
                                            const VerifyOptions& opts = {},
                                            const IntegratorConfig& icfg = {});

/// Two-region certificate for the general nonlinear path.
struct NonlinearCertificate {
  double delta = 0.0;
  double R = 0.0;
  double m = 0.0;     // linearization contraction on the H-sphere
  double m1 = 0.0;    // near-origin flow contraction, in [m, 1)
  double r1 = 0.0;    // radius (H-norm) where the m1 contraction is certified
  double r = 0.0;     // sublevel {V < r} sits inside {|x|_H < r1}
  double m2 = 0.0;    // one-dwell V-contraction on the annulus {r <= V <= R}
  double alpha = 0.0; // 4 * e^{-ln m1} * e^{-ln(m2)/2}
  double gamma = 0.0; // min{-ln(m1)/delta, -ln(m2)/(2 delta)}
  double rho = 0.0;   // norm-equivalence radius used to bound r1
  int sphere_samples = 0;
  int annulus_directions = 0;
  int annulus_radial = 0;
  std::uint64_t seed = 0;
  bool resolution_limited = false;
};

struct NonlinearConfig {
  /// m1 = m + m1_rule * (1 - m); the default midpoint rule is 0.5.
  double m1_rule = 0.5;
  int sphere_samples = 512;
  int annulus_directions = 256;
  int annulus_radial = 24;
  int refine_iters = 50;
  int bisection_iters = 20;
  std::uint64_t seed = 42;
  double rho_search_radius = 0.0;  // 0: sqrt(2 R)
};

/// The five-stage pipeline: m (exact), m1 (rule), r1 (bisection with
/// fresh-seed revalidation), r (sampled sublevel inclusion, 0.95 safety),
/// m2 (sampled annulus max with refinement), then alpha and gamma.
/// Each stage throws CertificationError naming itself on failure.
NonlinearCertificate compute_nonlinear_certificate(
    const SwitchedSystem& sys, double delta, double R,
    const NonlinearConfig& cfg = {}, const IntegratorConfig& icfg = {});

/// Monte Carlo over {V <= R}: checks
/// V(Phi_u^t(x)) <= min{1, alpha e^{-gamma t}} V(x) at every record point.
VerificationReport verify_nonlinear_bound(const SwitchedSystem& sys,
                                          const NonlinearCertificate& cert,
                                          const VerifyOptions& opts = {},
                                          const IntegratorConfig& icfg = {});

/// One row of the arbitrarily-slow-convergence demonstration.
struct SlowConvergenceRow {
  double T = 0.0;             // constant-tail start
  double time_to_half = 0.0;  // first time V drops below V(x0)/2
};

/// For each T, extends u by a constant tail of subsystem `tail_index` at T
/// and records when V first drops below half its initial value.
std::vector<SlowConvergenceRow> slow_convergence_demo(
    const SwitchedSystem& sys, const SwitchingSignal& u, const Vec& x0,
    const std::vector<double>& T_grid, int tail_index = 1,
    double settle_horizon = 30.0, const IntegratorConfig& icfg = {});

}  // namespace switchrate
