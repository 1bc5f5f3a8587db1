#pragma once

#include <cstdint>
#include <vector>

#include "switchrate/lyapunov_forms.hpp"
#include "switchrate/subsystem.hpp"

namespace switchrate {

/// dV(x) . f(x), computed from the analytic gradient (no finite differences).
double lie_derivative(const LyapunovFunction& V, const Subsystem& s,
                      const Vec& x);

/// Outcome of a sampled sign check of the Lie derivative for one subsystem.
struct WeakLyapunovReport {
  bool holds = false;
  Vec worst_point;
  double worst_value = 0.0;  // max sampled Lie derivative
  int samples = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
};

struct WeakLyapunovOptions {
  int sphere_samples = 4096;
  std::vector<double> radii = {0.25, 0.5, 1.0, 2.0};
  /// Acceptance threshold is tolerance_scale * max |V| over the sampled
  /// radius, per radius, to absorb round-off. Absolute floor 1e-300.
  double tolerance_scale = 1e-9;
  std::uint64_t seed = 42;
};

/// Samples L_{f_i} V over deterministic sphere grids scaled to each radius
/// and reports the worst value per subsystem. An empirical certificate:
/// sample count and seed are part of the report.
std::vector<WeakLyapunovReport> check_weak_lyapunov(
    const SwitchedSystem& sys, const WeakLyapunovOptions& opts = {});

/// Per-subsystem outcome of the exact linearization check: the maximum of
/// <x, B x>_H over the H-unit sphere, computed through a symmetric
/// eigenproblem rather than sampling.
struct LinearizationLyapunovReport {
  bool holds = false;
  double max_value = 0.0;
  double tolerance = 0.0;
};

std::vector<LinearizationLyapunovReport> check_linearization_lyapunov(
    const SwitchedSystem& sys, double tolerance = 1e-9);

struct RhoOptions {
  int sphere_samples = 512;
  int bisection_iters = 20;
  int radial_checks = 8;  // interior radii re-checked below a candidate
  std::uint64_t seed = 42;
  /// Bisection gives up below search_radius * min_fraction.
  double min_fraction = 1e-6;
};

/// Largest rho <= search_radius such that
///   |x|_H^2 / 2 <= V(x) <= 2 |x|_H^2
/// holds at all sampled points with |x|_H <= rho. Bisection over the radius
/// with sphere sampling at each candidate. Throws CertificationError when no
/// radius above the resolution floor qualifies.
double estimate_rho(const PolynomialForm& V, double search_radius,
                    const RhoOptions& opts = {});

}  // namespace switchrate
