#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "switchrate/types.hpp"

namespace switchrate {

/// Deterministic unit directions in R^dim.
///   dim 1: alternating {+1, -1};
///   dim 2: uniformly spaced angles starting at 0 (seed unused);
///   dim >= 3: seeded unit-Gaussian normalization.
std::vector<Vec> unit_directions(int dim, int count, std::uint64_t seed);

/// Golden-section maximization of a unimodal-enough f over [lo, hi].
/// Returns the abscissa of the best point found.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, int iters);

struct SphereMaxResult {
  Vec point;       // unit vector attaining the reported value
  double value;
  int samples;
  std::uint64_t seed;
};

/// Maximizes f over the Euclidean unit sphere: a deterministic sample pass
/// followed by coordinate-wise golden-section refinement in the tangent
/// chart around the best sample.
SphereMaxResult maximize_on_sphere(int dim,
                                   const std::function<double(const Vec&)>& f,
                                   int samples, int refine_iters,
                                   std::uint64_t seed);

}  // namespace switchrate
