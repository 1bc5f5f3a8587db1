#pragma once

#include <cstdint>
#include <vector>

#include "switchrate/types.hpp"

namespace switchrate {

/// Piecewise-constant right-continuous input: value on
/// [switch_times[k], switch_times[k+1]) is values[k]; the last value holds
/// up to `horizon`. switch_times[0] is always 0. Construction normalizes
/// away null switches (consecutive equal values).
class SwitchingSignal {
 public:
  SwitchingSignal(std::vector<double> switch_times, std::vector<int> values,
                  double horizon);

  const std::vector<double>& switch_times() const { return switch_times_; }
  const std::vector<int>& values() const { return values_; }
  double horizon() const { return horizon_; }

  /// Number of discontinuities (switch_times_[0] = 0 marks the start of the
  /// first segment, not a switch).
  int switch_count() const { return static_cast<int>(switch_times_.size()) - 1; }

  /// u(t) for t in [0, horizon]; right-continuous.
  int value_at(double t) const;

 private:
  std::vector<double> switch_times_;
  std::vector<int> values_;
  double horizon_;
};

struct ClassParameters {
  double dwell = 1.0;             // delta
  int chatter_bound = 1;          // N0
  double persistence_period = 1;  // T
  double window = 1.0;            // tau
};

struct DwellReport {
  bool holds = false;
  // Shortest constancy duration, the trailing segment truncated by the
  // horizon excluded; equals horizon when there are no switches.
  double min_gap = 0.0;
};

/// True iff every completed constancy interval lasts >= delta. A signal with
/// no switches holds for every delta.
DwellReport verify_dwell_time(const SwitchingSignal& u, double delta);

struct AverageDwellReport {
  bool holds = false;
  double worst_margin = 0.0;  // sup over windows of (count - tau/delta)
  double worst_t = 0.0;
  double worst_tau = 0.0;
  int worst_count = 0;
};

/// Checks N(t, t+tau) <= N0 + tau/delta over all windows. Exact: the
/// supremum of count - tau/delta is attained in the limit at windows whose
/// endpoints are discontinuities, and splits as
/// (b+1 - s_b/delta) + max_{a<=b} (s_a/delta - a), a prefix maximum.
AverageDwellReport verify_average_dwell_time(const SwitchingSignal& u,
                                             double delta, int chatter_bound);

struct PersistentDwellReport {
  bool holds = false;
  std::vector<double> witness_times;  // greedy t_0 < t_1 < ...
};

/// Greedy construction of t_0 < t_1 < ... with u constant on [t_k, t_k+delta)
/// and t_{k+1} - t_k <= T; holds iff the chain reaches horizon - T.
PersistentDwellReport verify_persistent_dwell_time(const SwitchingSignal& u,
                                                   double delta, double T);

enum class IndexLaw { RoundRobin, Uniform };

struct DwellGeneratorOptions {
  double gap_factor = 3.0;  // gaps uniform in [delta, gap_factor * delta]
  IndexLaw law = IndexLaw::Uniform;
};

/// Random signal with all gaps >= delta, deterministic per seed.
SwitchingSignal generate_dwell_time(std::uint64_t seed, int num_subsystems,
                                    double delta, double horizon,
                                    const DwellGeneratorOptions& opts = {});

/// Finite-horizon truncation of a chaotic input: window k (length tau) is
/// subdivided into ceil(q^-k) equal constancy intervals, so the maximal
/// constancy length within window k is <= tau * q^k. Guarded at 10^6
/// switches.
SwitchingSignal generate_chaotic_like(int num_subsystems, double tau,
                                      double horizon, double shrink_factor);

/// Periodic round-robin with equal constancy intervals: the regular-input
/// generator.
SwitchingSignal generate_regular(int num_subsystems, double interval,
                                 double horizon);

/// Replaces u on [T, new_horizon) by the constant index i. The result has
/// finitely many switches, hence a dwell-time.
SwitchingSignal constant_tail(const SwitchingSignal& u, double T, int index,
                              double new_horizon);

}  // namespace switchrate
