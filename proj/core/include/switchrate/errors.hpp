#pragma once

#include <stdexcept>
#include <string>

namespace switchrate {

/// Invalid caller input: dimension mismatches, malformed descriptions,
/// out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical breakdown: eigensolver non-convergence, overflow, nonfinite
/// states.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A certificate stage could not be established (for example a contraction
/// factor came out >= 1). Carries the stage and, when applicable, the
/// offending subsystem index (0-based, -1 if not tied to one subsystem).
class CertificationError : public std::runtime_error {
 public:
  CertificationError(std::string stage, int subsystem_index,
                     const std::string& what)
      : std::runtime_error(what),
        stage_(std::move(stage)),
        subsystem_index_(subsystem_index) {}

  const std::string& stage() const { return stage_; }
  int subsystem_index() const { return subsystem_index_; }

 private:
  std::string stage_;
  int subsystem_index_;
};

}  // namespace switchrate
