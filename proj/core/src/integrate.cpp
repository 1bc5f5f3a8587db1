#include "switchrate/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "switchrate/lyapunov.hpp"
#include "switchrate/matrix_exp.hpp"

namespace switchrate {

namespace {

IntegrationMethod resolve(IntegrationMethod m, const Subsystem& s) {
  if (m != IntegrationMethod::Auto) return m;
  return s.kind() == SubsystemKind::Linear ? IntegrationMethod::ExactLinear
                                           : IntegrationMethod::RK45Adaptive;
}

Trajectory two_point(const Vec& x0, double t, const Vec& x) {
  Trajectory tr;
  tr.times = {0.0, t};
  tr.states = {x0, x};
  tr.input_trace = {0, 0};
  return tr;
}

Vec rk4_span(const Subsystem& s, double t, Vec y, double step,
             long max_steps, long& used) {
  const long n = std::max<long>(1, static_cast<long>(std::ceil(t / step)));
  if (n > max_steps - used) {
    throw IntegrationError("rk4: step budget exhausted", two_point(y, 0.0, y));
  }
  const double h = t / static_cast<double>(n);
  for (long i = 0; i < n; ++i) {
    const Vec k1 = s.evaluate(y);
    const Vec k2 = s.evaluate(y + 0.5 * h * k1);
    const Vec k3 = s.evaluate(y + 0.5 * h * k2);
    const Vec k4 = s.evaluate(y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!y.allFinite()) {
      throw IntegrationError("rk4: state became nonfinite",
                             two_point(y, h * i, y));
    }
  }
  used += n;
  return y;
}

// Dormand-Prince 5(4) with the first-same-as-last evaluation reused.
Vec rk45_span(const Subsystem& s, double t, Vec y, const IntegratorConfig& cfg,
              long& used) {
  const Vec y0 = y;
  double elapsed = 0.0;
  Vec k1 = s.evaluate(y);
  double d0 = y.norm(), d1 = k1.norm();
  double h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h = std::min(h, t);

  const int n = static_cast<int>(y.size());
  Vec k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ynew(n);
  while (elapsed < t) {
    if (used >= cfg.max_steps) {
      throw IntegrationError("rk45: step budget exhausted",
                             two_point(y0, elapsed, y));
    }
    if (h < 1e-14 * std::max(1.0, t)) {
      throw IntegrationError("rk45: step size underflow",
                             two_point(y0, elapsed, y));
    }
    h = std::min(h, t - elapsed);

    k2 = s.evaluate(y + h * (0.2 * k1));
    k3 = s.evaluate(y + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
    k4 = s.evaluate(y + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 +
                             32.0 / 9.0 * k3));
    k5 = s.evaluate(y + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                             64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
    k6 = s.evaluate(y + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                             46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                             5103.0 / 18656.0 * k5));
    ynew = y + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 +
                    125.0 / 192.0 * k4 - 2187.0 / 6784.0 * k5 +
                    11.0 / 84.0 * k6);
    k7 = s.evaluate(ynew);
    ++used;

    if (!ynew.allFinite()) {
      h *= 0.5;
      continue;
    }
    const Vec e = h * (71.0 / 57600.0 * k1 - 71.0 / 16695.0 * k3 +
                       71.0 / 1920.0 * k4 - 17253.0 / 339200.0 * k5 +
                       22.0 / 525.0 * k6 - 1.0 / 40.0 * k7);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sc =
          cfg.abs_tol +
          cfg.rel_tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      const double q = e(i) / sc;
      acc += q * q;
    }
    const double err = std::sqrt(acc / n);
    if (err <= 1.0) {
      elapsed += h;
      y = ynew;
      k1 = k7;
    }
    const double factor =
        err <= 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= factor;
  }
  return y;
}

Vec flow_span(const Subsystem& s, double t, const Vec& x,
              const IntegratorConfig& cfg, long& used) {
  if (t == 0.0) return x;
  switch (resolve(cfg.method, s)) {
    case IntegrationMethod::ExactLinear: {
      if (s.kind() != SubsystemKind::Linear) {
        throw InputError("flow: ExactLinear requires a linear subsystem");
      }
      Vec y = matrix_exponential(s.matrix(), t) * x;
      if (!y.allFinite()) {
        throw IntegrationError("flow: exact propagation overflowed",
                               two_point(x, 0.0, x));
      }
      ++used;
      return y;
    }
    case IntegrationMethod::RK4Fixed:
      return rk4_span(s, t, x, cfg.step, cfg.max_steps, used);
    case IntegrationMethod::RK45Adaptive:
      return rk45_span(s, t, x, cfg, used);
    case IntegrationMethod::Auto:
      break;
  }
  throw InputError("flow: unresolved integration method");
}

}  // namespace

Vec flow(const Subsystem& s, double t, const Vec& x,
         const IntegratorConfig& cfg) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InputError("flow: t must be finite and >= 0");
  }
  if (x.size() != s.dimension()) throw InputError("flow: dimension mismatch");
  if (cfg.step <= 0.0) throw InputError("flow: step must be > 0");
  long used = 0;
  return flow_span(s, t, x, cfg, used);
}

Trajectory simulate_switched(const SwitchedSystem& sys,
                             const SwitchingSignal& u, const Vec& x0,
                             double horizon, const IntegratorConfig& cfg,
                             double record_dt) {
  sys.validate();
  if (x0.size() != sys.dimension()) {
    throw InputError("simulate_switched: x0 dimension mismatch");
  }
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw InputError("simulate_switched: horizon must be finite and > 0");
  }
  if (horizon > u.horizon() * (1.0 + 1e-12) + 1e-12) {
    throw InputError("simulate_switched: horizon exceeds the signal horizon");
  }
  if (record_dt < 0.0) {
    throw InputError("simulate_switched: record_dt must be >= 0");
  }
  for (int v : u.values()) {
    if (v > static_cast<int>(sys.subsystems.size())) {
      throw InputError(
          "simulate_switched: signal references subsystem index " +
          std::to_string(v) + " but the system has only " +
          std::to_string(sys.subsystems.size()));
    }
  }

  // Record grid: multiples of record_dt, every switch time, the endpoints.
  const double eps = 1e-12 * std::max(1.0, horizon);
  std::vector<double> grid;
  grid.push_back(0.0);
  if (record_dt > 0.0) {
    const long count = static_cast<long>(std::floor(horizon / record_dt));
    for (long k = 1; k <= count; ++k) grid.push_back(k * record_dt);
  }
  for (double ts : u.switch_times()) {
    if (ts > 0.0 && ts < horizon) grid.push_back(ts);
  }
  grid.push_back(horizon);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [&](double a, double b) { return b - a <= eps; }),
             grid.end());
  if (grid.back() < horizon) grid.back() = horizon;

  Trajectory tr;
  tr.times.reserve(grid.size());
  tr.states.reserve(grid.size());
  tr.input_trace.reserve(grid.size());
  Vec x = x0;
  tr.times.push_back(0.0);
  tr.states.push_back(x);
  tr.input_trace.push_back(u.value_at(0.0));

  long used = 0;
  for (std::size_t j = 1; j < grid.size(); ++j) {
    const double t0 = grid[j - 1];
    const double t1 = grid[j];
    // Constant on [t0, t1): the active subsystem is u at the left endpoint.
    const int idx = u.value_at(t0);
    const Subsystem& s = sys.subsystems[static_cast<std::size_t>(idx - 1)];
    try {
      x = flow_span(s, t1 - t0, x, cfg, used);
    } catch (const IntegrationError& e) {
      throw IntegrationError(e.what(), tr);
    }
    tr.times.push_back(t1);
    tr.states.push_back(x);
    tr.input_trace.push_back(u.value_at(t1));
  }
  return tr;
}

}  // namespace switchrate
