#pragma once

#include <variant>
#include <vector>

#include "switchrate/types.hpp"

namespace switchrate {

/// V(x) = x^T P x with P symmetric positive definite. Stores the Cholesky
/// factor L (P = L L^T), computed and checked at construction.
class QuadraticForm {
 public:
  explicit QuadraticForm(Mat P);

  int dimension() const { return static_cast<int>(P_.rows()); }
  const Mat& P() const { return P_; }
  const Mat& cholesky_l() const { return L_; }

  double value(const Vec& x) const;     // x^T P x
  Vec gradient(const Vec& x) const;     // 2 P x
  double p_norm(const Vec& x) const;    // sqrt(x^T P x)

  /// Maps a Euclidean unit vector to the P-unit sphere: u -> L^{-T} u.
  Vec from_euclidean_unit(const Vec& u) const;

 private:
  Mat P_;
  Mat L_;
};

/// One monomial of a scalar polynomial: coeff * prod_j x_j^exponents[j].
struct ScalarTerm {
  double coeff = 0.0;
  std::vector<int> exponents;

  int total_degree() const;
};

/// Polynomial V with V(0) = 0, dV(0) = 0 (every term has degree >= 2) and
/// positive definite Hessian H at the origin, assembled from the degree-2
/// terms. The associated norm is |x|_H = sqrt(x^T H x / 2).
class PolynomialForm {
 public:
  PolynomialForm(int dimension, std::vector<ScalarTerm> terms);

  int dimension() const { return dim_; }
  const std::vector<ScalarTerm>& terms() const { return terms_; }
  const Mat& hessian_at_origin() const { return H_; }

  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  double h_norm(const Vec& x) const;  // sqrt(x^T H x / 2)

  /// Maps a Euclidean unit vector to the H-unit sphere.
  Vec from_euclidean_unit(const Vec& u) const;

 private:
  int dim_;
  std::vector<ScalarTerm> terms_;  // merged, degree >= 2
  Mat H_;
  Mat half_h_chol_l_;  // Cholesky factor of H/2
};

using LyapunovFunction = std::variant<QuadraticForm, PolynomialForm>;

int dimension_of(const LyapunovFunction& V);
double value_of(const LyapunovFunction& V, const Vec& x);
Vec gradient_of(const LyapunovFunction& V, const Vec& x);

/// The norm the convergence statements are phrased in: the P-norm for a
/// quadratic V, the H-norm for a polynomial V.
double lyapunov_norm(const LyapunovFunction& V, const Vec& x);

/// Quadratic part of V as the matrix Htilde = H/2 (equal to P for a
/// quadratic form), so |x|^2 = x^T Htilde x in the norm above.
Mat quadratic_part(const LyapunovFunction& V);

/// Maps a Euclidean unit vector onto the unit sphere of `lyapunov_norm`.
Vec sphere_point(const LyapunovFunction& V, const Vec& u);

}  // namespace switchrate
