#pragma once

#include <vector>

#include "switchrate/lyapunov_forms.hpp"
#include "switchrate/types.hpp"

namespace switchrate {

enum class SubsystemKind { Linear, Polynomial };

/// One monomial of a polynomial vector field: contributes
/// coeff * prod_j x_j^exponents[j] to coordinate `target`.
/// Total degree must be >= 2; the linear part lives in the subsystem matrix.
struct MonomialTerm {
  int target = 0;
  double coeff = 0.0;
  std::vector<int> exponents;

  int total_degree() const;
};

/// A member of the switched family: either a linear field x -> A x or a
/// polynomial field x -> B x + higher-order monomials. The origin is an
/// equilibrium by construction and `matrix()` is the exact linearization
/// there.
class Subsystem {
 public:
  static Subsystem linear(Mat A);
  static Subsystem polynomial(Mat linear_part, std::vector<MonomialTerm> terms);

  SubsystemKind kind() const { return kind_; }
  int dimension() const { return static_cast<int>(matrix_.rows()); }
  const Mat& matrix() const { return matrix_; }
  const std::vector<MonomialTerm>& terms() const { return terms_; }

  /// f(x). Throws InputError on dimension mismatch.
  Vec evaluate(const Vec& x) const;

  /// The linearization at the origin (just `matrix()`, by representation).
  const Mat& jacobian_at_origin() const { return matrix_; }

 private:
  Subsystem(SubsystemKind kind, Mat matrix, std::vector<MonomialTerm> terms);

  SubsystemKind kind_;
  Mat matrix_;
  std::vector<MonomialTerm> terms_;  // sparse, merged, degree >= 2
};

/// Max |d f_i/d x_j (0) - matrix_ij| with f differentiated by central
/// differences of the given step. Validation aid for polynomial inputs.
double jacobian_origin_fd_deviation(const Subsystem& s, double step);

struct SpectralResult {
  bool hurwitz = false;
  double abscissa = 0.0;  // max real part of the eigenvalues
};

/// Hurwitz test: true iff the spectral abscissa is < -margin.
/// Throws NumericalError if the eigensolver does not converge.
SpectralResult is_hurwitz(const Mat& A, double margin = 0.0);

/// The switched family plus the shared Lyapunov function.
struct SwitchedSystem {
  std::vector<Subsystem> subsystems;
  LyapunovFunction lyapunov;

  int dimension() const;
  /// Throws InputError unless all subsystems share one dimension and the
  /// Lyapunov form matches it.
  void validate() const;
};

/// Pointwise convex combination sum_i v_i f_i. Weights must be nonnegative
/// and sum to 1 (tolerance 1e-12).
Subsystem convex_combination(const SwitchedSystem& sys, const Vec& weights);

}  // namespace switchrate
