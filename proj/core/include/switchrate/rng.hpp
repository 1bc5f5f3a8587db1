#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace switchrate {

/// Derives the sub-seed used by stage `name` (and an optional per-item index)
/// from a single base seed. All randomness in the library flows from one
/// base seed through these derived streams, so runs are reproducible and
/// independent stages never share a stream.
std::uint64_t derive_seed(std::uint64_t base, std::string_view name,
                          std::uint64_t index = 0);

/// Deterministic random source. mt19937_64 has a fully specified sequence;
/// the uniform/normal mappings below are spelled out here rather than taken
/// from <random> distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    // Rejection-free modulo is biased for huge ranges; ranges here are tiny.
    return lo + gen_() % (hi - lo + 1);
  }

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace switchrate
