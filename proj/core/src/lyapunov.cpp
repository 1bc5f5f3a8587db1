#include "switchrate/lyapunov.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "switchrate/errors.hpp"
#include "switchrate/rng.hpp"
#include "switchrate/sphere.hpp"

namespace switchrate {

// ---------------------------------------------------------------------------
// QuadraticForm

QuadraticForm::QuadraticForm(Mat P) : P_(std::move(P)) {
  if (P_.rows() != P_.cols() || P_.rows() < 1) {
    throw InputError("QuadraticForm: P must be square and nonempty");
  }
  const double scale = std::max(1.0, P_.cwiseAbs().maxCoeff());
  if (((P_ - P_.transpose()).cwiseAbs().maxCoeff()) > 1e-12 * scale) {
    throw InputError("QuadraticForm: P is not symmetric");
  }
  P_ = 0.5 * (P_ + P_.transpose());  // exact symmetry for the factorization
  Eigen::LLT<Mat> llt(P_);
  if (llt.info() != Eigen::Success) {
    throw InputError("QuadraticForm: P is not positive definite");
  }
  L_ = llt.matrixL();
}

double QuadraticForm::value(const Vec& x) const {
  if (x.size() != P_.rows()) throw InputError("QuadraticForm: dimension mismatch");
  return x.dot(P_ * x);
}

Vec QuadraticForm::gradient(const Vec& x) const {
  if (x.size() != P_.rows()) throw InputError("QuadraticForm: dimension mismatch");
  return 2.0 * (P_ * x);
}

double QuadraticForm::p_norm(const Vec& x) const {
  // sqrt(x^T P x) through the factor: |L^T x|, nonnegative by construction.
  if (x.size() != P_.rows()) throw InputError("p_norm: dimension mismatch");
  return (L_.transpose() * x).norm();
}

Vec QuadraticForm::from_euclidean_unit(const Vec& u) const {
  return L_.transpose().triangularView<Eigen::Upper>().solve(u);
}

// ---------------------------------------------------------------------------
// PolynomialForm

int ScalarTerm::total_degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

PolynomialForm::PolynomialForm(int dimension, std::vector<ScalarTerm> terms)
    : dim_(dimension) {
  if (dim_ < 1) throw InputError("PolynomialForm: dimension must be >= 1");
  std::map<std::vector<int>, double> acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != dim_) {
      throw InputError("PolynomialForm: exponent vector length != dimension");
    }
    for (int e : t.exponents) {
      if (e < 0) throw InputError("PolynomialForm: negative exponent");
    }
    if (t.total_degree() < 2) {
      throw InputError(
          "PolynomialForm: terms of degree < 2 are not allowed (V and dV must "
          "vanish at the origin)");
    }
    acc[t.exponents] += t.coeff;
  }
  terms_.clear();
  for (auto& [exps, coeff] : acc) {
    if (coeff == 0.0) continue;
    terms_.push_back({coeff, exps});
  }

  // Hessian at the origin comes from the degree-2 terms only.
  H_ = Mat::Zero(dim_, dim_);
  for (const auto& t : terms_) {
    if (t.total_degree() != 2) continue;
    int first = -1, second = -1;
    for (int j = 0; j < dim_; ++j) {
      if (t.exponents[j] == 2) first = second = j;
      if (t.exponents[j] == 1) (first < 0 ? first : second) = j;
    }
    if (first == second) {
      H_(first, first) += 2.0 * t.coeff;  // d^2/dx^2 of c x^2
    } else {
      H_(first, second) += t.coeff;
      H_(second, first) += t.coeff;
    }
  }
  Eigen::LLT<Mat> llt(0.5 * H_);
  if (llt.info() != Eigen::Success) {
    throw InputError("PolynomialForm: Hessian at the origin is not positive definite");
  }
  half_h_chol_l_ = llt.matrixL();
}

double PolynomialForm::value(const Vec& x) const {
  if (x.size() != dim_) throw InputError("PolynomialForm: dimension mismatch");
  double v = 0.0;
  for (const auto& t : terms_) {
    double mono = t.coeff;
    for (int j = 0; j < dim_; ++j) {
      for (int e = 0; e < t.exponents[j]; ++e) mono *= x(j);
    }
    v += mono;
  }
  return v;
}

Vec PolynomialForm::gradient(const Vec& x) const {
  if (x.size() != dim_) throw InputError("PolynomialForm: dimension mismatch");
  Vec g = Vec::Zero(dim_);
  for (const auto& t : terms_) {
    for (int j = 0; j < dim_; ++j) {
      if (t.exponents[j] == 0) continue;
      double mono = t.coeff * t.exponents[j];
      for (int k = 0; k < dim_; ++k) {
        const int e = t.exponents[k] - (k == j ? 1 : 0);
        for (int q = 0; q < e; ++q) mono *= x(k);
      }
      g(j) += mono;
    }
  }
  return g;
}

double PolynomialForm::h_norm(const Vec& x) const {
  if (x.size() != dim_) throw InputError("h_norm: dimension mismatch");
  return (half_h_chol_l_.transpose() * x).norm();
}

Vec PolynomialForm::from_euclidean_unit(const Vec& u) const {
  return half_h_chol_l_.transpose().triangularView<Eigen::Upper>().solve(u);
}

// ---------------------------------------------------------------------------
// Variant helpers

int dimension_of(const LyapunovFunction& V) {
  return std::visit([](const auto& f) { return f.dimension(); }, V);
}

double value_of(const LyapunovFunction& V, const Vec& x) {
  return std::visit([&](const auto& f) { return f.value(x); }, V);
}

Vec gradient_of(const LyapunovFunction& V, const Vec& x) {
  return std::visit([&](const auto& f) { return f.gradient(x); }, V);
}

double lyapunov_norm(const LyapunovFunction& V, const Vec& x) {
  if (const auto* q = std::get_if<QuadraticForm>(&V)) return q->p_norm(x);
  return std::get<PolynomialForm>(V).h_norm(x);
}

Mat quadratic_part(const LyapunovFunction& V) {
  if (const auto* q = std::get_if<QuadraticForm>(&V)) return q->P();
  return 0.5 * std::get<PolynomialForm>(V).hessian_at_origin();
}

Vec sphere_point(const LyapunovFunction& V, const Vec& u) {
  return std::visit([&](const auto& f) { return f.from_euclidean_unit(u); }, V);
}

// ---------------------------------------------------------------------------
// Checks

double lie_derivative(const LyapunovFunction& V, const Subsystem& s,
                      const Vec& x) {
  if (x.size() != s.dimension() || dimension_of(V) != s.dimension()) {
    throw InputError("lie_derivative: dimension mismatch");
  }
  return gradient_of(V, x).dot(s.evaluate(x));
}

std::vector<WeakLyapunovReport> check_weak_lyapunov(
    const SwitchedSystem& sys, const WeakLyapunovOptions& opts) {
  sys.validate();
  if (opts.sphere_samples < 1) {
    throw InputError("check_weak_lyapunov: need at least one sample");
  }
  if (opts.radii.empty()) {
    throw InputError("check_weak_lyapunov: need at least one radius");
  }
  const int d = sys.dimension();
  const auto dirs = unit_directions(
      d, opts.sphere_samples, derive_seed(opts.seed, "weak-lyapunov"));

  std::vector<WeakLyapunovReport> reports;
  for (const auto& s : sys.subsystems) {
    WeakLyapunovReport rep;
    rep.samples = static_cast<int>(dirs.size()) *
                  static_cast<int>(opts.radii.size());
    rep.seed = opts.seed;
    rep.worst_value = -std::numeric_limits<double>::infinity();
    double v_scale = 0.0;
    for (double radius : opts.radii) {
      if (radius <= 0.0) throw InputError("check_weak_lyapunov: radius <= 0");
      for (const Vec& u : dirs) {
        const Vec x = radius * sphere_point(sys.lyapunov, u);
        v_scale = std::max(v_scale, std::abs(value_of(sys.lyapunov, x)));
        const double lv = lie_derivative(sys.lyapunov, s, x);
        if (lv > rep.worst_value) {
          rep.worst_value = lv;
          rep.worst_point = x;
        }
      }
    }
    rep.tolerance = std::max(opts.tolerance_scale * v_scale, 1e-300);
    rep.holds = rep.worst_value <= rep.tolerance;
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::vector<LinearizationLyapunovReport> check_linearization_lyapunov(
    const SwitchedSystem& sys, double tolerance) {
  sys.validate();
  // <x, B x>_H maximized over the H-unit sphere: with Htilde = H/2 = L L^T
  // and y = L^T x this is the largest eigenvalue of the symmetrized
  // L^{-1} (Htilde B) L^{-T}.
  const Mat htilde = quadratic_part(sys.lyapunov);
  Eigen::LLT<Mat> llt(htilde);
  if (llt.info() != Eigen::Success) {
    throw InputError("check_linearization_lyapunov: quadratic part not positive definite");
  }
  const Mat L = llt.matrixL();
  std::vector<LinearizationLyapunovReport> reports;
  for (const auto& s : sys.subsystems) {
    const Mat B = s.jacobian_at_origin();
    Mat S = htilde * B;
    S = 0.5 * (S + S.transpose()).eval();
    const Mat C = L.triangularView<Eigen::Lower>().solve(
        Mat(L.triangularView<Eigen::Lower>().solve(S).transpose()));
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (C + C.transpose()));
    if (es.info() != Eigen::Success) {
      throw NumericalError("check_linearization_lyapunov: eigensolver failed");
    }
    LinearizationLyapunovReport rep;
    rep.max_value = es.eigenvalues().maxCoeff();
    rep.tolerance = tolerance;
    rep.holds = rep.max_value <= tolerance;
    reports.push_back(rep);
  }
  return reports;
}

double estimate_rho(const PolynomialForm& V, double search_radius,
                    const RhoOptions& opts) {
  if (search_radius <= 0.0) {
    throw InputError("estimate_rho: search_radius must be > 0");
  }
  const int d = V.dimension();
  const auto dirs = unit_directions(d, opts.sphere_samples,
                                    derive_seed(opts.seed, "rho-sampling"));
  // Two-sided norm-equivalence test on the H-sphere of radius s.
  const auto radius_ok = [&](double s) {
    for (const Vec& u : dirs) {
      const Vec x = s * V.from_euclidean_unit(u);
      const double v = V.value(x);
      const double n2 = s * s;
      if (v < 0.5 * n2 || v > 2.0 * n2) return false;
    }
    return true;
  };
  // All radii at or below the candidate must qualify.
  const auto candidate_ok = [&](double s) {
    for (int k = 0; k < opts.radial_checks; ++k) {
      const double frac =
          static_cast<double>(opts.radial_checks - k) / opts.radial_checks;
      if (!radius_ok(s * frac)) return false;
    }
    return true;
  };

  if (candidate_ok(search_radius)) return search_radius;
  double lo = 0.0, hi = search_radius;
  for (int it = 0; it < opts.bisection_iters; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (candidate_ok(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo < opts.min_fraction * search_radius) {
    std::ostringstream msg;
    msg << "estimate_rho: no radius above resolution floor "
        << opts.min_fraction * search_radius
        << " satisfies the norm-equivalence inequalities";
    throw CertificationError("rho", -1, msg.str());
  }
  return lo;
}

}  // namespace switchrate
