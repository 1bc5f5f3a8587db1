#pragma once

#include <vector>

#include "switchrate/errors.hpp"
#include "switchrate/signals.hpp"
#include "switchrate/subsystem.hpp"
#include "switchrate/types.hpp"

namespace switchrate {

enum class IntegrationMethod {
  Auto,          // ExactLinear for Linear subsystems, RK45 otherwise
  ExactLinear,   // matrix exponential; Linear subsystems only
  RK4Fixed,
  RK45Adaptive,
};

struct IntegratorConfig {
  IntegrationMethod method = IntegrationMethod::Auto;
  double step = 1e-2;       // RK4Fixed
  double abs_tol = 1e-10;   // RK45Adaptive
  double rel_tol = 1e-9;
  long max_steps = 10'000'000;
};

struct Trajectory {
  std::vector<double> times;        // strictly increasing, starts at 0
  std::vector<Vec> states;          // same length as times
  std::vector<int> input_trace;     // active subsystem index (1-based) at each time

  int size() const { return static_cast<int>(times.size()); }
};

/// Integration failure carrying the last finite prefix for diagnostics.
class IntegrationError : public NumericalError {
 public:
  IntegrationError(const std::string& what, Trajectory partial)
      : NumericalError(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

/// Phi_s^t(x): the flow of one subsystem. t must be >= 0.
Vec flow(const Subsystem& s, double t, const Vec& x,
         const IntegratorConfig& cfg = {});

/// Switched trajectory for input u from x0 over [0, horizon]: each constancy
/// segment is integrated with its active subsystem, restarting exactly at
/// switch times. Records states at multiples of record_dt, at every switch
/// time, and at the horizon.
Trajectory simulate_switched(const SwitchedSystem& sys,
                             const SwitchingSignal& u, const Vec& x0,
                             double horizon, const IntegratorConfig& cfg = {},
                             double record_dt = 0.1);

}  // namespace switchrate
