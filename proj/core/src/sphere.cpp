#include "switchrate/sphere.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "switchrate/errors.hpp"
#include "switchrate/rng.hpp"

namespace switchrate {

std::vector<Vec> unit_directions(int dim, int count, std::uint64_t seed) {
  if (dim < 1) throw InputError("unit_directions: dimension must be >= 1");
  if (count < 1) throw InputError("unit_directions: count must be >= 1");
  std::vector<Vec> dirs;
  dirs.reserve(count);
  if (dim == 1) {
    for (int k = 0; k < count; ++k) {
      Vec v(1);
      v(0) = (k % 2 == 0) ? 1.0 : -1.0;
      dirs.push_back(v);
    }
    return dirs;
  }
  if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / count;
      Vec v(2);
      v << std::cos(th), std::sin(th);
      dirs.push_back(v);
    }
    return dirs;
  }
  Rng rng(seed);
  while (static_cast<int>(dirs.size()) < count) {
    Vec v(dim);
    for (int j = 0; j < dim; ++j) v(j) = rng.normal();
    const double n = v.norm();
    if (n < 1e-12) continue;
    dirs.push_back(v / n);
  }
  return dirs;
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, int iters) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;  // 0.618...
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int k = 0; k < iters; ++k) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return fc > fd ? c : d;
}

namespace {

// Orthonormal basis of the tangent space at unit vector x.
std::vector<Vec> tangent_basis(const Vec& x) {
  const int d = static_cast<int>(x.size());
  std::vector<Vec> basis;
  basis.reserve(d - 1);
  for (int j = 0; j < d && static_cast<int>(basis.size()) < d - 1; ++j) {
    Vec e = Vec::Unit(d, j);
    e -= e.dot(x) * x;
    for (const Vec& b : basis) e -= e.dot(b) * b;
    const double n = e.norm();
    if (n > 1e-8) basis.push_back(e / n);
  }
  return basis;
}

}  // namespace

SphereMaxResult maximize_on_sphere(int dim,
                                   const std::function<double(const Vec&)>& f,
                                   int samples, int refine_iters,
                                   std::uint64_t seed) {
  const auto dirs = unit_directions(dim, samples, seed);
  SphereMaxResult best;
  best.samples = samples;
  best.seed = seed;
  best.value = -std::numeric_limits<double>::infinity();
  for (const Vec& u : dirs) {
    const double v = f(u);
    if (v > best.value) {
      best.value = v;
      best.point = u;
    }
  }
  if (dim == 1 || refine_iters <= 0) return best;

  // Bracket half-width: start at the sampling coverage scale.
  double w = (dim == 2) ? (2.0 * std::numbers::pi / samples)
                        : 6.0 * std::pow(static_cast<double>(samples),
                                         -1.0 / (dim - 1));
  Vec x = best.point;
  for (int it = 0; it < refine_iters; ++it) {
    bool hit_edge = false;
    for (const Vec& e : tangent_basis(x)) {
      const auto g = [&](double s) { return f((x + s * e).normalized()); };
      const double s_best = golden_section_max(g, -w, w, 40);
      if (std::abs(s_best) > 0.8 * w) hit_edge = true;
      x = (x + s_best * e).normalized();
    }
    const double v = f(x);
    if (v > best.value) {
      best.value = v;
      best.point = x;
    }
    if (!hit_edge) w = std::max(w * 0.65, 1e-9);
  }
  return best;
}

}  // namespace switchrate
