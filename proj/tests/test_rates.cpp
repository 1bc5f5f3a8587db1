// Contraction gains, the homogeneous M/beta certificate, the nonlinear
// two-region certificate, Monte-Carlo verification, and the slow-convergence
// demonstration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "switchrate/builtin.hpp"
#include "switchrate/errors.hpp"
#include "switchrate/integrate.hpp"
#include "switchrate/matrix_exp.hpp"
#include "switchrate/rates.hpp"
#include "switchrate/rng.hpp"

using namespace switchrate;

namespace {

// Frozen reference values for the two-spiral family with V = |x|^2, computed
// independently with an arbitrary-precision-checked SVD of e^{delta B}.
struct RefPoint {
  double delta;
  double M;
};
const RefPoint kSpiralM[] = {
    {0.05, 0.99998958729135634}, {0.25, 0.99871076812414139},
    {0.5, 0.99000150447278645},  {1.0, 0.92935221133587609},
    {2.0, 0.63305938830597752},  {4.0, 0.16234742834803953},
    {10.0, 0.0099488260385718844},
};

Vec v2(double a, double b) {
  Vec x(2);
  x << a, b;
  return x;
}

SwitchedSystem decoupled_decay() {
  return {{Subsystem::linear(-Mat::Identity(2, 2))},
          QuadraticForm(Mat::Identity(2, 2))};
}

}  // namespace

TEST_CASE("beta identities and class-KL shape") {
  const double M = 0.5, delta = 1.0;
  CHECK(beta(M, delta, 0.7, 0.0) == 0.7);          // beta(r, 0) = r
  CHECK(beta(M, delta, 1.0, delta) == 1.0);        // flat up to delta
  CHECK(beta(M, delta, 1.0, 0.5 * delta) == 1.0);
  CHECK(beta(M, delta, 1.0, 3.0 * delta) ==
        doctest::Approx(M).epsilon(1e-14));        // touches M at 3 delta
  // Linear in r.
  CHECK(beta(M, delta, 2.0, 5.0) ==
        doctest::Approx(2.0 * beta(M, delta, 1.0, 5.0)).epsilon(1e-14));
  // Nonincreasing in t, decaying to zero.
  double prev = beta(M, delta, 1.0, 0.0);
  for (double t = 0.25; t <= 40.0; t += 0.25) {
    const double cur = beta(M, delta, 1.0, t);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
  CHECK(beta(M, delta, 1.0, 200.0) < 1e-29);
  // Increasing in r on a grid.
  for (double r = 0.1; r < 2.0; r += 0.1) {
    CHECK(beta(M, delta, r + 0.1, 7.0) > beta(M, delta, r, 7.0));
  }
  CHECK_THROWS_AS(beta(1.0, delta, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(beta(0.5, 0.0, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(beta(0.5, 1.0, -1.0, 1.0), InputError);
}

TEST_CASE("M for pure decay is exactly exp(-delta)") {
  const auto sys = decoupled_decay();
  for (double delta : {0.25, 1.0, 3.0}) {
    const auto cert = compute_M(sys, delta);
    CHECK(cert.M == doctest::Approx(std::exp(-delta)).epsilon(1e-13));
    CHECK_FALSE(cert.resolution_limited);
    CHECK(cert.samples == 0);
    REQUIRE(cert.per_subsystem_m.size() == 1);
    CHECK(cert.argmax_point.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("M for the two-spiral family matches frozen references") {
  const auto sys = builtin_two_spiral_system();
  for (const auto& ref : kSpiralM) {
    const auto cert = compute_M(sys, ref.delta);
    CHECK(std::abs(cert.M - ref.M) / ref.M <= 1e-12);
    CHECK(cert.M > 0.0);
    CHECK(cert.M < 1.0);
    CHECK_FALSE(cert.resolution_limited);
    // Both subsystems have the same singular values by symmetry.
    REQUIRE(cert.per_subsystem_m.size() == 2);
    CHECK(std::abs(cert.per_subsystem_m[0] - cert.per_subsystem_m[1]) <=
          1e-14);
  }
}

TEST_CASE("gain argmax attains the reported maximum") {
  const auto sys = builtin_two_spiral_system();
  const auto gains = per_subsystem_gain(sys, 1.0, GainMethod::ExactSvd);
  REQUIRE(gains.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const Vec& x = gains[i].argmax;
    CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const Vec y = matrix_exponential(sys.subsystems[i].matrix(), 1.0) * x;
    CHECK(y.norm() == doctest::Approx(gains[i].value).epsilon(1e-12));
  }
}

TEST_CASE("one-dwell gains are invariant under scaling of P") {
  // Replacing P by c*P rescales the Cholesky factor by sqrt(c), which
  // cancels inside L^T e^{dB} L^-T, so every per-subsystem gain is
  // unchanged. The gains no longer certify a contraction for this P (the
  // spirals are only nonexpansive in the Euclidean norm), so the raw gain
  // search is the right probe here.
  const Mat B1 = builtin_two_spiral_system().subsystems[0].matrix();
  const Mat B2 = builtin_two_spiral_system().subsystems[1].matrix();
  Mat P(2, 2);
  P << 2.0, 0.3, 0.3, 1.0;
  SwitchedSystem sys{{Subsystem::linear(B1), Subsystem::linear(B2)},
                     QuadraticForm(P)};
  SwitchedSystem scaled{{Subsystem::linear(B1), Subsystem::linear(B2)},
                        QuadraticForm(3.7 * P)};
  for (double delta : {0.5, 1.0, 2.0}) {
    const auto a = per_subsystem_gain(sys, delta, GainMethod::ExactSvd);
    const auto b = per_subsystem_gain(scaled, delta, GainMethod::ExactSvd);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(std::abs(a[i].value - b[i].value) <= 1e-10 * a[i].value);
    }
  }
}

TEST_CASE("vanishing dwell-time hits the resolution clamp") {
  const auto sys = builtin_two_spiral_system();
  const auto cert = compute_M(sys, 1e-6);
  CHECK(cert.resolution_limited);
  CHECK(cert.M < 1.0);
  CHECK(cert.M > 1.0 - 1e-4);
}

TEST_CASE("non-Hurwitz subsystems are rejected with their index") {
  Mat bad(2, 2);
  bad << 0.1, 0, 0, -1;
  const Mat B1 = builtin_two_spiral_system().subsystems[0].matrix();
  SwitchedSystem sys{{Subsystem::linear(B1), Subsystem::linear(bad)},
                     QuadraticForm(Mat::Identity(2, 2))};
  try {
    compute_M(sys, 1.0);
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    CHECK(e.stage() == "hurwitz");
    CHECK(e.subsystem_index() == 1);
  }
}

TEST_CASE("homogeneous path rejects polynomial inputs") {
  const auto cubic = builtin_cubic_damped_system();
  CHECK_THROWS_AS(compute_M(cubic, 1.0), InputError);
  CHECK_THROWS_AS(per_subsystem_gain(cubic, 1.0, GainMethod::ExactSvd),
                  InputError);
  const auto sys = builtin_two_spiral_system();
  CHECK_THROWS_AS(compute_M(sys, -1.0), InputError);
}

TEST_CASE("sphere search reproduces the exact gains") {
  const auto sys = builtin_two_spiral_system();
  for (double delta : {0.25, 1.0, 4.0}) {
    const auto exact = per_subsystem_gain(sys, delta, GainMethod::ExactSvd);
    const auto sampled =
        per_subsystem_gain(sys, delta, GainMethod::SphereSearch);
    REQUIRE(exact.size() == sampled.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
      CHECK(std::abs(sampled[i].value - exact[i].value) <=
            1e-4 * exact[i].value);
      // Sampling can only undershoot a maximum (up to refinement rounding).
      CHECK(sampled[i].value <= exact[i].value * (1.0 + 1e-12));
    }
    const auto cert = compute_M(sys, delta, GainMethod::SphereSearch);
    CHECK(cert.samples == 4096);
    CHECK(cert.seed == 42);
  }
}

TEST_CASE("sphere search gain on the cubic flows") {
  const auto sys = builtin_cubic_damped_system();
  GainSearchOptions opts;
  opts.samples = 128;
  opts.refine_iters = 20;
  const auto gains =
      per_subsystem_gain(sys, 1.0, GainMethod::SphereSearch, opts);
  REQUIRE(gains.size() == 2);
  for (const auto& g : gains) {
    // Cubic damping makes the one-dwell flow contract much harder than the
    // linearization's 0.929.
    CHECK(g.value > 0.5);
    CHECK(g.value < 0.6);
  }
  // Deterministic per seed.
  const auto again =
      per_subsystem_gain(sys, 1.0, GainMethod::SphereSearch, opts);
  CHECK(again[0].value == gains[0].value);
  CHECK(again[1].value == gains[1].value);
}

TEST_CASE("M(delta) curve is monotone and matches pointwise computation") {
  const auto sys = builtin_two_spiral_system();
  std::vector<double> grid;
  for (int k = 0; k < 20; ++k) {
    grid.push_back(0.1 * std::pow(5.0 / 0.1, k / 19.0));
  }
  const auto curve = m_delta_curve(sys, grid);
  REQUIRE(curve.size() == grid.size());
  for (std::size_t k = 0; k < curve.size(); ++k) {
    CHECK(curve[k].delta == grid[k]);
    CHECK(curve[k].M > 0.0);
    CHECK(curve[k].M < 1.0);
    CHECK(curve[k].M == compute_M(sys, grid[k]).M);
    if (k > 0) CHECK(curve[k].M <= curve[k - 1].M + 1e-9);
  }
  CHECK_THROWS_AS(m_delta_curve(sys, {}), InputError);
}

TEST_CASE("homogeneous bound holds over random dwell trials") {
  const auto sys = builtin_two_spiral_system();
  const auto cert = compute_M(sys, 1.0);
  VerifyOptions opts;
  opts.trials = 50;
  const auto rep = verify_homogeneous_bound(sys, cert, opts);
  CHECK(rep.passed());
  CHECK(rep.violations == 0);
  CHECK(rep.trials == 50);
  CHECK(rep.points_checked > 50 * 100);  // horizon 20, record every 0.1
  // Equality at t = 0 makes the worst ratio exactly 1 in trial 0.
  CHECK(rep.max_ratio == 1.0);
  CHECK(rep.worst_time == 0.0);
  CHECK(rep.worst_trial == 0);

  const auto rep2 = verify_homogeneous_bound(sys, cert, opts);
  CHECK(rep2.points_checked == rep.points_checked);
  CHECK(rep2.max_ratio == rep.max_ratio);

  VerifyOptions other = opts;
  other.seed = 7;
  const auto rep3 = verify_homogeneous_bound(sys, cert, other);
  CHECK(rep3.passed());
  CHECK(rep3.points_checked != rep.points_checked);
}

TEST_CASE("a fabricated too-small M is caught as violations") {
  const auto sys = builtin_two_spiral_system();
  auto cert = compute_M(sys, 1.0);
  cert.M = 1e-6;  // far below the true one-dwell growth
  VerifyOptions opts;
  opts.trials = 10;
  opts.horizon_mult = 6.0;
  const auto rep = verify_homogeneous_bound(sys, cert, opts);
  CHECK_FALSE(rep.passed());
  CHECK(rep.violations > 0);
  CHECK(rep.max_ratio > 1.0 + opts.tolerance);
  CHECK(rep.worst_time > 0.0);
}

TEST_CASE("norm products along back-to-back dwell switching stay under M^k") {
  const auto sys = builtin_two_spiral_system();
  const double delta = 1.0;
  const auto cert = compute_M(sys, delta);
  const auto u = generate_regular(2, delta, 10.5);
  std::vector<Vec> starts{cert.argmax_point};
  Rng rng(4242);
  for (int k = 0; k < 5; ++k) {
    Vec g(2);
    g << rng.normal(), rng.normal();
    starts.push_back(g / g.norm());
  }
  for (const Vec& x0 : starts) {
    const auto tr = simulate_switched(sys, u, x0, 10.0, {}, delta);
    for (int j = 0; j < tr.size(); ++j) {
      const double t = tr.times[j];
      const long k = std::lround(t / delta);
      REQUIRE(std::abs(t - k * delta) <= 1e-9);
      CHECK(tr.states[j].norm() <=
            std::pow(cert.M, static_cast<double>(k)) * (1.0 + 1e-8));
    }
  }
  // The first dwell interval from the argmax start is tight.
  const auto tight =
      simulate_switched(sys, u, cert.argmax_point, delta, {}, delta);
  CHECK(tight.states.back().norm() ==
        doctest::Approx(cert.M).epsilon(1e-12));
}

TEST_CASE("nonlinear certificate closed form for pure decay") {
  const auto sys = decoupled_decay();
  const auto cert = compute_nonlinear_certificate(sys, 1.0, 1.0);
  const double m = std::exp(-1.0);
  CHECK(std::abs(cert.m - m) <= 1e-10);
  CHECK(cert.m1 == doctest::Approx(0.5 * (1.0 + m)).epsilon(1e-14));
  CHECK(cert.rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // Uniform contraction fills the reachable radius: r1 = crossing of V at R.
  CHECK(cert.r1 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cert.r == doctest::Approx(0.5).epsilon(1e-9));
  // V ratio is exactly e^{-2} everywhere, then inflated by 1.02.
  CHECK(cert.m2 == doctest::Approx(1.02 * std::exp(-2.0)).epsilon(1e-9));
  CHECK(cert.alpha ==
        doctest::Approx(4.0 / (cert.m1 * std::sqrt(cert.m2))).epsilon(1e-12));
  CHECK(cert.alpha > 4.0);
  CHECK(cert.gamma ==
        doctest::Approx(-std::log(cert.m1)).epsilon(1e-12));
  CHECK(cert.gamma > 0.0);
  CHECK(cert.gamma <= -std::log(cert.m) + 1e-12);
  CHECK_FALSE(cert.resolution_limited);
}

TEST_CASE("nonlinear certificate for the cubic damped family") {
  const auto sys = builtin_cubic_damped_system();
  NonlinearConfig cfg;
  cfg.sphere_samples = 128;
  cfg.annulus_directions = 64;
  cfg.annulus_radial = 8;
  cfg.refine_iters = 15;
  const auto cert = compute_nonlinear_certificate(sys, 1.0, 4.0, cfg);
  // The linearization gain equals M(1) of the two-spiral family.
  CHECK(std::abs(cert.m - 0.92935221133587609) <= 1e-12);
  CHECK(cert.m1 == doctest::Approx(0.5 * (1.0 + cert.m)).epsilon(1e-14));
  // Damping contracts everywhere, so r1 reaches the V = R crossing radius 2.
  CHECK(cert.r1 == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(cert.r == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(cert.rho == doctest::Approx(std::sqrt(8.0)).epsilon(1e-14));
  CHECK(cert.m2 > 0.1);
  CHECK(cert.m2 < 0.25);
  CHECK(cert.alpha > 4.0);
  CHECK(cert.gamma > 0.0);
  CHECK(cert.gamma <= -std::log(cert.m) + 1e-12);

  VerifyOptions vopts;
  vopts.trials = 50;
  const auto rep = verify_nonlinear_bound(sys, cert, vopts);
  CHECK(rep.passed());
  CHECK(rep.points_checked > 50 * 100);
}

TEST_CASE("nonlinear certificate for the spirals embedded as polynomials") {
  // Same matrices, declared as polynomial fields with no higher terms, and a
  // polynomial |x|^2: everything flows through the RK45 + sampling path.
  const auto lin = builtin_two_spiral_system();
  SwitchedSystem sys{
      {Subsystem::polynomial(lin.subsystems[0].matrix(), {}),
       Subsystem::polynomial(lin.subsystems[1].matrix(), {})},
      PolynomialForm(2, {{1.0, {2, 0}}, {1.0, {0, 2}}})};
  NonlinearConfig cfg;
  cfg.sphere_samples = 64;
  cfg.annulus_directions = 32;
  cfg.annulus_radial = 8;
  cfg.refine_iters = 10;
  const auto cert = compute_nonlinear_certificate(sys, 1.0, 4.0, cfg);
  CHECK(std::abs(cert.m - 0.92935221133587609) <= 1e-12);
  CHECK(cert.r1 == doctest::Approx(2.0).epsilon(1e-9));
  // Worst one-dwell V ratio for the linear flows is M^2, inflated by 1.02.
  CHECK(cert.m2 == doctest::Approx(1.02 * cert.m * cert.m).epsilon(1e-3));
  CHECK(cert.m2 < 1.0);
  CHECK(cert.alpha > 4.0);
  CHECK(cert.gamma > 0.0);

  VerifyOptions vopts;
  vopts.trials = 20;
  const auto rep = verify_nonlinear_bound(sys, cert, vopts);
  CHECK(rep.passed());
}

TEST_CASE("nonlinear stage failures carry their stage name") {
  // Non-Hurwitz linearization.
  Mat bad(2, 2);
  bad << 0.1, 0, 0, -1;
  SwitchedSystem unstable{{Subsystem::polynomial(bad, {})},
                          QuadraticForm(Mat::Identity(2, 2))};
  try {
    compute_nonlinear_certificate(unstable, 1.0, 1.0);
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    CHECK(e.stage() == "linearization");
    CHECK(e.subsystem_index() == 0);
  }

  // Hurwitz but with transient growth far above 1 at this dwell-time.
  Mat shear(2, 2);
  shear << -0.01, 10, 0, -0.01;
  SwitchedSystem transient{{Subsystem::linear(shear)},
                           QuadraticForm(Mat::Identity(2, 2))};
  try {
    compute_nonlinear_certificate(transient, 1.0, 1.0);
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    CHECK(e.stage() == "linearization");
  }

  // Contraction near the origin but growth on the outer annulus: the m2
  // stage must refuse. f1 = -x1 + 2 x1^2 repels beyond x1 = 0.5.
  SwitchedSystem outer{{Subsystem::polynomial(-Mat::Identity(2, 2),
                                              {{0, 2.0, {2, 0}}})},
                       QuadraticForm(Mat::Identity(2, 2))};
  NonlinearConfig cfg;
  cfg.sphere_samples = 64;
  cfg.annulus_directions = 32;
  cfg.annulus_radial = 8;
  cfg.refine_iters = 10;
  cfg.bisection_iters = 12;
  try {
    compute_nonlinear_certificate(outer, 0.05, 2.0, cfg);
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    CHECK(e.stage() == "m2");
  }

  NonlinearConfig tiny;
  tiny.sphere_samples = 4;
  CHECK_THROWS_AS(
      compute_nonlinear_certificate(builtin_cubic_damped_system(), 1.0, 4.0,
                                    tiny),
      InputError);
}

TEST_CASE("a fabricated nonlinear envelope is caught as violations") {
  const auto sys = builtin_cubic_damped_system();
  NonlinearConfig cfg;
  cfg.sphere_samples = 64;
  cfg.annulus_directions = 32;
  cfg.annulus_radial = 8;
  cfg.refine_iters = 10;
  auto cert = compute_nonlinear_certificate(sys, 1.0, 4.0, cfg);
  cert.alpha = 0.5;
  cert.gamma = 10.0;
  VerifyOptions opts;
  opts.trials = 10;
  opts.horizon_mult = 2.0;
  const auto rep = verify_nonlinear_bound(sys, cert, opts);
  CHECK_FALSE(rep.passed());
  CHECK(rep.violations > 0);
}

TEST_CASE("slow convergence rows grow with the chatter prefix") {
  const auto sys = builtin_two_spiral_system();
  const auto u = generate_regular(2, 0.01, 21.0);
  const Vec x0 = v2(1, 0);
  const auto rows = slow_convergence_demo(sys, u, x0, {0.0, 1.0, 2.0}, 1, 30.0);
  REQUIRE(rows.size() == 3);
  // T = 0: pure subsystem-1 decay halves V near t = 1.373.
  CHECK(rows[0].T == 0.0);
  CHECK(rows[0].time_to_half == doctest::Approx(1.3729).epsilon(5e-3));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].time_to_half > rows[k - 1].time_to_half);
    // The fast alternation almost freezes V, so each extra second of chatter
    // delays the halving by about a second.
    CHECK(rows[k].time_to_half - rows[k - 1].time_to_half >
          0.8 * (rows[k].T - rows[k - 1].T));
  }
}

TEST_CASE("slow convergence reports infinity when V never halves") {
  const auto sys = builtin_two_spiral_system();
  const SwitchingSignal u({0.0}, {2}, 0.05);
  const auto rows =
      slow_convergence_demo(sys, u, v2(1, 0), {0.0}, 2, 0.05);
  REQUIRE(rows.size() == 1);
  CHECK(std::isinf(rows[0].time_to_half));
}
