// Quadratic/polynomial Lyapunov forms, Lie derivatives, and the sampled and
// exact hypothesis checks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "switchrate/builtin.hpp"
#include "switchrate/errors.hpp"
#include "switchrate/lyapunov.hpp"
#include "switchrate/rng.hpp"
#include "switchrate/subsystem.hpp"

using namespace switchrate;

namespace {

Vec v2(double a, double b) {
  Vec x(2);
  x << a, b;
  return x;
}

}  // namespace

TEST_CASE("quadratic form: value, gradient, norm against closed forms") {
  Mat P(2, 2);
  P << 2, 0.5, 0.5, 1;
  const QuadraticForm V(P);
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Vec x = v2(rng.uniform(-2, 2), rng.uniform(-2, 2));
    CHECK(V.value(x) == doctest::Approx(x.dot(P * x)).epsilon(1e-14));
    CHECK((V.gradient(x) - 2.0 * P * x).norm() <= 1e-14);
    CHECK(V.p_norm(x) ==
          doctest::Approx(std::sqrt(x.dot(P * x))).epsilon(1e-13));
  }
  CHECK(Mat(V.cholesky_l() * V.cholesky_l().transpose()).isApprox(P, 1e-14));
}

TEST_CASE("quadratic form rejects bad P") {
  Mat asym(2, 2);
  asym << 1, 0.1, 0, 1;
  CHECK_THROWS_AS(QuadraticForm{asym}, InputError);
  Mat indef(2, 2);
  indef << 1, 2, 2, 1;  // eigenvalues 3 and -1
  CHECK_THROWS_AS(QuadraticForm{indef}, InputError);
  CHECK_THROWS_AS(QuadraticForm{Mat::Zero(2, 3)}, InputError);
}

TEST_CASE("p-norm satisfies the parallelogram law") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat P = oracles::random_spd(rng, 3);
    const QuadraticForm V(P);
    for (int k = 0; k < 20; ++k) {
      Vec x(3), y(3);
      for (int j = 0; j < 3; ++j) {
        x(j) = rng.uniform(-2, 2);
        y(j) = rng.uniform(-2, 2);
      }
      const double lhs = std::pow(V.p_norm(x + y), 2) +
                         std::pow(V.p_norm(x - y), 2);
      const double rhs =
          2.0 * std::pow(V.p_norm(x), 2) + 2.0 * std::pow(V.p_norm(y), 2);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("from_euclidean_unit lands on the unit sphere of the norm") {
  Rng rng(23);
  const Mat P = oracles::random_spd(rng, 3);
  const LyapunovFunction V = QuadraticForm(P);
  for (int k = 0; k < 50; ++k) {
    Vec u(3);
    for (int j = 0; j < 3; ++j) u(j) = rng.normal();
    u.normalize();
    const Vec x = sphere_point(V, u);
    CHECK(lyapunov_norm(V, x) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("polynomial form: value, gradient, Hessian for a mixed example") {
  // V = x1^2 + x1 x2 + x2^2 + 0.25 x1^4 + x1^2 x2^2
  const PolynomialForm V(2, {{1.0, {2, 0}},
                             {1.0, {1, 1}},
                             {1.0, {0, 2}},
                             {0.25, {4, 0}},
                             {1.0, {2, 2}}});
  Mat H(2, 2);
  H << 2, 1, 1, 2;
  CHECK(V.hessian_at_origin() == H);

  Rng rng(31);
  for (int k = 0; k < 60; ++k) {
    const Vec x = v2(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    const double expect = x(0) * x(0) + x(0) * x(1) + x(1) * x(1) +
                          0.25 * std::pow(x(0), 4) +
                          x(0) * x(0) * x(1) * x(1);
    CHECK(V.value(x) == doctest::Approx(expect).epsilon(1e-13));
    // Analytic gradient against central differences.
    Vec g_fd(2);
    for (int j = 0; j < 2; ++j) {
      Vec xp = x, xm = x;
      xp(j) += 1e-6;
      xm(j) -= 1e-6;
      g_fd(j) = (V.value(xp) - V.value(xm)) / 2e-6;
    }
    CHECK((V.gradient(x) - g_fd).cwiseAbs().maxCoeff() <= 1e-7);
    // h_norm^2 = x^T (H/2) x
    CHECK(V.h_norm(x) ==
          doctest::Approx(std::sqrt(0.5 * x.dot(H * x))).epsilon(1e-13));
  }
}

TEST_CASE("polynomial form for |x|^2 reduces to the Euclidean norm") {
  const PolynomialForm V(2, {{1.0, {2, 0}}, {1.0, {0, 2}}});
  CHECK(V.hessian_at_origin() == 2.0 * Mat::Identity(2, 2));
  const Vec x = v2(0.6, -0.8);
  CHECK(V.h_norm(x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(V.value(x) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("polynomial form validation and merging") {
  CHECK_THROWS_AS(PolynomialForm(2, {{1.0, {1, 0}}}), InputError);  // degree 1
  CHECK_THROWS_AS(PolynomialForm(2, {{1.0, {2}}}), InputError);     // bad length
  CHECK_THROWS_AS(PolynomialForm(2, {{1.0, {-2, 4}}}), InputError);
  // Indefinite Hessian x1^2 - x2^2.
  CHECK_THROWS_AS(PolynomialForm(2, {{1.0, {2, 0}}, {-1.0, {0, 2}}}),
                  InputError);
  const PolynomialForm merged(
      2, {{0.7, {2, 0}}, {0.3, {2, 0}}, {1.0, {0, 2}}, {0.0, {4, 0}}});
  CHECK(merged.terms().size() == 2);
  CHECK(merged.hessian_at_origin() == 2.0 * Mat::Identity(2, 2));
}

TEST_CASE("quadratic_part agrees between equivalent representations") {
  const auto quad = builtin_two_spiral_system();
  const auto poly = builtin_cubic_damped_system();
  CHECK(quadratic_part(quad.lyapunov) == Mat::Identity(2, 2));
  CHECK(quadratic_part(poly.lyapunov) == Mat::Identity(2, 2));
  const Vec x = v2(1.3, -0.4);
  CHECK(lyapunov_norm(quad.lyapunov, x) ==
        doctest::Approx(lyapunov_norm(poly.lyapunov, x)).epsilon(1e-14));
}

TEST_CASE("lie derivative matches 2 x^T P f(x) for quadratic V") {
  Rng rng(41);
  const Mat P = oracles::random_spd(rng, 2);
  Mat B(2, 2);
  B << -0.3, 1.1, -0.9, -0.6;
  const LyapunovFunction V = QuadraticForm(P);
  const auto s = Subsystem::linear(B);
  for (int k = 0; k < 80; ++k) {
    const Vec x = v2(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double expect = 2.0 * x.dot(P * (B * x));
    CHECK(lie_derivative(V, s, x) == doctest::Approx(expect).epsilon(1e-13));
    // Quadratic scaling in the state.
    const double lam = rng.uniform(0.1, 3.0);
    CHECK(lie_derivative(V, s, lam * x) ==
          doctest::Approx(lam * lam * lie_derivative(V, s, x)).epsilon(1e-12));
  }
}

TEST_CASE("lie derivative of the cubic damped field") {
  const auto sys = builtin_cubic_damped_system();
  Rng rng(43);
  for (int k = 0; k < 80; ++k) {
    const Vec x = v2(rng.uniform(-2, 2), rng.uniform(-2, 2));
    // L V = 2 x . (B1 x - |x|^2 x) = -2 x2^2 - 2 |x|^4 for B1.
    const double expect =
        -2.0 * x(1) * x(1) - 2.0 * std::pow(x.squaredNorm(), 2);
    CHECK(lie_derivative(sys.lyapunov, sys.subsystems[0], x) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK_THROWS_AS(
      lie_derivative(sys.lyapunov, sys.subsystems[0], Vec::Zero(3)),
      InputError);
}

TEST_CASE("weak Lyapunov check passes on the two-spiral system") {
  const auto sys = builtin_two_spiral_system();
  const auto reports = check_weak_lyapunov(sys);
  REQUIRE(reports.size() == 2);
  for (const auto& rep : reports) {
    CHECK(rep.holds);
    // L V = -2 x2^2 <= 0 everywhere, so even the sampled max is <= 0.
    CHECK(rep.worst_value <= 1e-9);
    CHECK(rep.samples == 4096 * 4);
  }
}

TEST_CASE("weak Lyapunov check fails when the Lie derivative goes positive") {
  Mat B(2, 2);
  B << 1, 0, 0, -3;
  SwitchedSystem sys{{Subsystem::linear(B)}, QuadraticForm(Mat::Identity(2, 2))};
  const auto reports = check_weak_lyapunov(sys);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].holds);
  CHECK(reports[0].worst_value > 1.0);  // L V = 2 x1^2 - 6 x2^2, radius up to 2
  CHECK(reports[0].worst_point.size() == 2);
}

TEST_CASE("weak Lyapunov check is deterministic per seed") {
  const auto sys = builtin_cubic_damped_system();
  WeakLyapunovOptions opts;
  opts.sphere_samples = 256;
  const auto a = check_weak_lyapunov(sys, opts);
  const auto b = check_weak_lyapunov(sys, opts);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].worst_value == b[i].worst_value);
    CHECK(a[i].worst_point == b[i].worst_point);
    CHECK(a[i].tolerance == b[i].tolerance);
  }
}

TEST_CASE("linearization check: exact zero for the spirals") {
  const auto sys = builtin_two_spiral_system();
  const auto reports = check_linearization_lyapunov(sys);
  REQUIRE(reports.size() == 2);
  for (const auto& rep : reports) {
    CHECK(rep.holds);
    // max of <x, B x> on the unit circle is exactly 0 (attained on the x1
    // axis); the eigensolver reproduces it to machine precision.
    CHECK(std::abs(rep.max_value) <= 1e-14);
  }
}

TEST_CASE("linearization check agrees with a dense sampled maximum") {
  Rng rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat P = oracles::random_spd(rng, 2);
    Mat B(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) B(i, j) = rng.uniform(-1, 1);
    }
    SwitchedSystem sys{{Subsystem::linear(B)}, QuadraticForm(P)};
    const auto rep = check_linearization_lyapunov(sys).at(0);

    const QuadraticForm V(P);
    const double sampled = oracles::dense_circle_max(
        [&](const Vec& u) {
          const Vec x = V.from_euclidean_unit(u);  // P-unit point
          return x.dot(P * (B * x));
        },
        10000);
    // The sampled max is a lower bound on the true (eigenvalue) max and the
    // circle is sampled densely enough for 1e-6 agreement.
    CHECK(rep.max_value >= sampled - 1e-12);
    CHECK(rep.max_value - sampled <= 1e-6);
  }
}

TEST_CASE("linearization check flags an unstable direction") {
  Mat B(2, 2);
  B << 0.2, 0, 0, -1;
  SwitchedSystem sys{{Subsystem::linear(B)}, QuadraticForm(Mat::Identity(2, 2))};
  const auto rep = check_linearization_lyapunov(sys).at(0);
  CHECK_FALSE(rep.holds);
  CHECK(rep.max_value == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("rho estimate: exactly quadratic V fills the whole search radius") {
  const PolynomialForm V(2, {{1.0, {2, 0}}, {1.0, {0, 2}}});
  CHECK(estimate_rho(V, 3.5) == 3.5);
}

TEST_CASE("rho estimate locates the norm-equivalence breakdown") {
  // V = |x|^2 + x1^4: the upper bound V <= 2 |x|_H^2 fails first along e1 at
  // radius 1.
  const PolynomialForm V(2, {{1.0, {2, 0}}, {1.0, {0, 2}}, {1.0, {4, 0}}});
  const double rho = estimate_rho(V, 4.0);
  CHECK(rho == doctest::Approx(1.0).epsilon(1e-4));

  // Scaled version: 1e6 x1^4 pushes the breakdown to radius 1e-3.
  const PolynomialForm W(2, {{1.0, {2, 0}}, {1.0, {0, 2}}, {1e6, {4, 0}}});
  const double rho_small = estimate_rho(W, 10.0);
  CHECK(rho_small == doctest::Approx(1e-3).epsilon(5e-2));

  // With a coarse resolution floor the same search must give up.
  RhoOptions opts;
  opts.min_fraction = 1e-2;
  CHECK_THROWS_AS(estimate_rho(W, 10.0, opts), CertificationError);
  CHECK_THROWS_AS(estimate_rho(V, -1.0), InputError);
}
