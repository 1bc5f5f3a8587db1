#include "switchrate/signals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "switchrate/errors.hpp"
#include "switchrate/rng.hpp"

namespace switchrate {

SwitchingSignal::SwitchingSignal(std::vector<double> switch_times,
                                 std::vector<int> values, double horizon)
    : horizon_(horizon) {
  if (switch_times.empty() || switch_times.size() != values.size()) {
    throw InputError(
        "SwitchingSignal: switch_times and values must be nonempty and of "
        "equal length");
  }
  if (!(std::isfinite(horizon) && horizon > 0.0)) {
    throw InputError("SwitchingSignal: horizon must be finite and > 0");
  }
  if (switch_times.front() != 0.0) {
    throw InputError("SwitchingSignal: switch_times must start at 0");
  }
  for (std::size_t k = 0; k < switch_times.size(); ++k) {
    if (!std::isfinite(switch_times[k])) {
      throw InputError("SwitchingSignal: nonfinite switch time");
    }
    if (k > 0 && switch_times[k] <= switch_times[k - 1]) {
      throw InputError("SwitchingSignal: switch_times must be strictly increasing");
    }
    if (values[k] < 1) {
      throw InputError("SwitchingSignal: subsystem indices are 1-based");
    }
  }
  if (switch_times.back() >= horizon) {
    throw InputError("SwitchingSignal: last switch time must be before the horizon");
  }
  // Null switches carry no discontinuity; merge them away.
  switch_times_.reserve(switch_times.size());
  values_.reserve(values.size());
  for (std::size_t k = 0; k < switch_times.size(); ++k) {
    if (!values_.empty() && values_.back() == values[k]) continue;
    switch_times_.push_back(switch_times[k]);
    values_.push_back(values[k]);
  }
}

int SwitchingSignal::value_at(double t) const {
  const double eps = 1e-12 * std::max(1.0, horizon_);
  if (t < -eps || t > horizon_ + eps) {
    std::ostringstream msg;
    msg << "SwitchingSignal: t = " << t << " outside [0, " << horizon_ << "]";
    throw InputError(msg.str());
  }
  t = std::clamp(t, 0.0, horizon_);
  const auto it =
      std::upper_bound(switch_times_.begin(), switch_times_.end(), t);
  return values_[static_cast<std::size_t>(it - switch_times_.begin()) - 1];
}

DwellReport verify_dwell_time(const SwitchingSignal& u, double delta) {
  if (!(delta > 0.0)) throw InputError("verify_dwell_time: delta must be > 0");
  DwellReport rep;
  const auto& times = u.switch_times();
  if (times.size() == 1) {
    rep.min_gap = u.horizon();
    rep.holds = true;
    return rep;
  }
  rep.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < times.size(); ++k) {
    rep.min_gap = std::min(rep.min_gap, times[k] - times[k - 1]);
  }
  rep.holds = rep.min_gap >= delta - 1e-12 * std::max(1.0, delta);
  return rep;
}

AverageDwellReport verify_average_dwell_time(const SwitchingSignal& u,
                                             double delta, int chatter_bound) {
  if (!(delta > 0.0)) {
    throw InputError("verify_average_dwell_time: delta must be > 0");
  }
  if (chatter_bound < 0) {
    throw InputError("verify_average_dwell_time: chatter bound must be >= 0");
  }
  AverageDwellReport rep;
  const auto& times = u.switch_times();
  const int n = u.switch_count();
  if (n == 0) {
    rep.holds = true;
    return rep;
  }
  // Discontinuities s_1..s_n = times[1..n]. For the pair a <= b the window
  // shrinking onto [s_a, s_b] yields count b-a+1 over length s_b - s_a.
  rep.worst_margin = -std::numeric_limits<double>::infinity();
  double best_prefix = -std::numeric_limits<double>::infinity();
  int best_a = 0;
  for (int b = 1; b <= n; ++b) {
    const double start_term = times[static_cast<std::size_t>(b)] / delta - b;
    if (start_term > best_prefix) {
      best_prefix = start_term;
      best_a = b;
    }
    const double margin =
        (b + 1 - times[static_cast<std::size_t>(b)] / delta) + best_prefix;
    if (margin > rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_t = times[static_cast<std::size_t>(best_a)];
      rep.worst_tau =
          times[static_cast<std::size_t>(b)] - times[static_cast<std::size_t>(best_a)];
      rep.worst_count = b - best_a + 1;
    }
  }
  rep.holds = rep.worst_margin <= chatter_bound + 1e-12;
  return rep;
}

PersistentDwellReport verify_persistent_dwell_time(const SwitchingSignal& u,
                                                   double delta, double T) {
  if (!(delta > 0.0) || !(T > 0.0)) {
    throw InputError("verify_persistent_dwell_time: delta and T must be > 0");
  }
  PersistentDwellReport rep;
  const double horizon = u.horizon();
  const double eps = 1e-12 * std::max(1.0, horizon);
  if (horizon <= T + eps) {
    // The observation window is too short to falsify the period bound.
    rep.holds = true;
    return rep;
  }

  // Constancy runs [a_k, b_k); admissible starts within a run are [a, b-delta].
  std::vector<double> a = u.switch_times();
  std::vector<double> b(a.begin() + 1, a.end());
  b.push_back(horizon);

  // Queries come with nondecreasing t, so runs ending before t stay skipped.
  std::size_t cursor = 0;
  const auto earliest_start_from = [&](double t) -> double {
    while (cursor < a.size() && b[cursor] - delta + eps < t) ++cursor;
    for (std::size_t k = cursor; k < a.size(); ++k) {
      if (b[k] - a[k] < delta - eps) continue;
      const double lo = std::max(a[k], t);
      if (lo <= b[k] - delta + eps) return lo;
    }
    return std::numeric_limits<double>::infinity();
  };

  double t0 = earliest_start_from(0.0);
  if (t0 > T + eps) {
    rep.holds = false;
    return rep;
  }
  rep.witness_times.push_back(t0);
  while (rep.witness_times.back() + T < horizon - eps) {
    const double prev = rep.witness_times.back();
    const double next = earliest_start_from(prev + delta);
    if (next - prev > T + eps) {
      rep.holds = false;
      return rep;
    }
    rep.witness_times.push_back(next);
  }
  rep.holds = true;
  return rep;
}

SwitchingSignal generate_dwell_time(std::uint64_t seed, int num_subsystems,
                                    double delta, double horizon,
                                    const DwellGeneratorOptions& opts) {
  if (num_subsystems < 1) {
    throw InputError("generate_dwell_time: need at least one subsystem");
  }
  if (!(delta > 0.0) || !(horizon > 0.0)) {
    throw InputError("generate_dwell_time: delta and horizon must be > 0");
  }
  if (!(opts.gap_factor >= 1.0)) {
    throw InputError("generate_dwell_time: gap_factor must be >= 1");
  }
  Rng rng(derive_seed(seed, "dwell-gen"));
  std::vector<double> times{0.0};
  std::vector<int> values;
  int current =
      opts.law == IndexLaw::RoundRobin
          ? 1
          : static_cast<int>(rng.uniform_int(1, static_cast<std::uint64_t>(
                                                    num_subsystems)));
  values.push_back(current);
  double t = 0.0;
  while (true) {
    t += rng.uniform(delta, opts.gap_factor * delta);
    if (t >= horizon) break;
    if (num_subsystems == 1) continue;
    if (opts.law == IndexLaw::RoundRobin) {
      current = current % num_subsystems + 1;
    } else {
      // Draw from the other indices so every generated switch is real.
      const int r = static_cast<int>(rng.uniform_int(
          1, static_cast<std::uint64_t>(num_subsystems - 1)));
      current = r >= current ? r + 1 : r;
    }
    times.push_back(t);
    values.push_back(current);
  }
  return SwitchingSignal(std::move(times), std::move(values), horizon);
}

SwitchingSignal generate_chaotic_like(int num_subsystems, double tau,
                                      double horizon, double shrink_factor) {
  if (num_subsystems < 1) {
    throw InputError("generate_chaotic_like: need at least one subsystem");
  }
  if (!(tau > 0.0) || !(horizon > 0.0)) {
    throw InputError("generate_chaotic_like: tau and horizon must be > 0");
  }
  if (!(shrink_factor > 0.0) || !(shrink_factor < 1.0)) {
    throw InputError("generate_chaotic_like: shrink_factor must be in (0, 1)");
  }
  const int windows = static_cast<int>(std::ceil(horizon / tau));
  std::vector<double> times;
  std::vector<int> values;
  long total = 0;
  long counter = 0;
  for (int k = 0; k < windows; ++k) {
    const double start = k * tau;
    const double pieces_exact = std::pow(1.0 / shrink_factor, k);
    if (pieces_exact > 1e6) {
      throw InputError(
          "generate_chaotic_like: window subdivision exceeds 10^6 pieces");
    }
    const long pieces = static_cast<long>(std::ceil(pieces_exact - 1e-9));
    total += pieces;
    if (total > 1'000'000) {
      throw InputError("generate_chaotic_like: more than 10^6 switches");
    }
    const double len = tau / static_cast<double>(pieces);
    for (long j = 0; j < pieces; ++j) {
      const double t = start + j * len;
      if (t >= horizon) break;
      times.push_back(t);
      values.push_back(static_cast<int>(counter % num_subsystems) + 1);
      ++counter;
    }
  }
  return SwitchingSignal(std::move(times), std::move(values), horizon);
}

SwitchingSignal generate_regular(int num_subsystems, double interval,
                                 double horizon) {
  if (num_subsystems < 1) {
    throw InputError("generate_regular: need at least one subsystem");
  }
  if (!(interval > 0.0) || !(horizon > 0.0)) {
    throw InputError("generate_regular: interval and horizon must be > 0");
  }
  if (horizon / interval > 1e6) {
    throw InputError("generate_regular: more than 10^6 switches");
  }
  std::vector<double> times;
  std::vector<int> values;
  long k = 0;
  for (double t = 0.0; t < horizon; t = ++k * interval) {
    times.push_back(t);
    values.push_back(static_cast<int>((k) % num_subsystems) + 1);
  }
  return SwitchingSignal(std::move(times), std::move(values), horizon);
}

SwitchingSignal constant_tail(const SwitchingSignal& u, double T, int index,
                              double new_horizon) {
  if (index < 1) throw InputError("constant_tail: subsystem indices are 1-based");
  if (!(T >= 0.0) || !(new_horizon > T)) {
    throw InputError("constant_tail: need 0 <= T < new_horizon");
  }
  if (T > u.horizon() || new_horizon < u.horizon()) {
    throw InputError("constant_tail: need T <= u.horizon <= new_horizon");
  }
  std::vector<double> times;
  std::vector<int> values;
  const auto& st = u.switch_times();
  const auto& sv = u.values();
  for (std::size_t k = 0; k < st.size() && st[k] < T; ++k) {
    times.push_back(st[k]);
    values.push_back(sv[k]);
  }
  if (times.empty()) {
    times.push_back(0.0);
    values.push_back(index);
  } else if (T > 0.0) {
    times.push_back(T);
    values.push_back(index);
  }
  return SwitchingSignal(std::move(times), std::move(values), new_horizon);
}

}  // namespace switchrate
