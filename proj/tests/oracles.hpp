// Independent reference implementations used only by tests. These cross-check
// the library along different algorithmic routes (Taylor series instead of
// Pade, dense scans instead of refined search, plain finite differences), so
// agreement is evidence rather than tautology.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "switchrate/rng.hpp"
#include "switchrate/subsystem.hpp"
#include "switchrate/types.hpp"

namespace oracles {

using switchrate::Mat;
using switchrate::Vec;

// Plain order-30 Taylor sum; for |A|_1 <= 5 the truncation error is below
// 5^31/31! ~ 6e-13.
inline Mat expm_taylor(const Mat& A, int terms = 30) {
  Mat sum = Mat::Identity(A.rows(), A.cols());
  Mat power = Mat::Identity(A.rows(), A.cols());
  for (int k = 1; k <= terms; ++k) {
    power = Mat(power * A) / static_cast<double>(k);
    sum += power;
  }
  return sum;
}

// Central differences, column by column.
inline Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x,
                       double h) {
  const auto n = x.size();
  Mat J(f(x).size(), n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Vec xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    J.col(j) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return J;
}

// Classic fixed-step RK4, written independently of the library integrator.
inline Vec rk4_reference(const std::function<Vec(const Vec&)>& f, double t,
                         Vec y, long steps) {
  const double h = t / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) {
    const Vec k1 = f(y);
    const Vec k2 = f(y + 0.5 * h * k1);
    const Vec k3 = f(y + 0.5 * h * k2);
    const Vec k4 = f(y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

// Dense scan over the unit circle (dim 2 only).
inline double dense_circle_max(const std::function<double(const Vec&)>& f,
                               int count) {
  double best = -1e300;
  for (int k = 0; k < count; ++k) {
    const double a = 2.0 * std::numbers::pi * k / count;
    Vec u(2);
    u << std::cos(a), std::sin(a);
    best = std::max(best, f(u));
  }
  return best;
}

// Random Hurwitz matrix: a uniform [-1,1] matrix shifted left of the
// imaginary axis by its own abscissa plus a drawn margin.
inline Mat random_hurwitz(switchrate::Rng& rng, int dim) {
  Mat G(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) G(i, j) = rng.uniform(-1.0, 1.0);
  }
  const auto spec = switchrate::is_hurwitz(G);
  const double margin = rng.uniform(0.2, 1.0);
  return G - (spec.abscissa + margin) * Mat::Identity(dim, dim);
}

// Random symmetric positive definite matrix with moderate conditioning.
inline Mat random_spd(switchrate::Rng& rng, int dim) {
  Mat Q(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) Q(i, j) = rng.uniform(-1.0, 1.0);
  }
  return Mat(Q.transpose() * Q) + 0.3 * Mat::Identity(dim, dim);
}

}  // namespace oracles
