#include "switchrate/subsystem.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "switchrate/errors.hpp"

namespace switchrate {

int MonomialTerm::total_degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

namespace {

void validate_terms(int dim, const std::vector<MonomialTerm>& terms) {
  for (const auto& t : terms) {
    if (t.target < 0 || t.target >= dim) {
      throw InputError("polynomial term: target coordinate out of range");
    }
    if (static_cast<int>(t.exponents.size()) != dim) {
      throw InputError("polynomial term: exponent vector length != dimension");
    }
    for (int e : t.exponents) {
      if (e < 0) throw InputError("polynomial term: negative exponent");
    }
    if (t.total_degree() < 2) {
      throw InputError(
          "polynomial term: total degree must be >= 2 (linear part belongs in "
          "the matrix)");
    }
  }
}

// Merge duplicate (target, exponents) entries; drop exact-zero coefficients.
std::vector<MonomialTerm> merged(std::vector<MonomialTerm> terms) {
  std::map<std::pair<int, std::vector<int>>, double> acc;
  for (auto& t : terms) acc[{t.target, t.exponents}] += t.coeff;
  std::vector<MonomialTerm> out;
  out.reserve(acc.size());
  for (auto& [key, coeff] : acc) {
    if (coeff == 0.0) continue;
    out.push_back({key.first, coeff, key.second});
  }
  return out;
}

}  // namespace

Subsystem::Subsystem(SubsystemKind kind, Mat matrix,
                     std::vector<MonomialTerm> terms)
    : kind_(kind), matrix_(std::move(matrix)), terms_(std::move(terms)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw InputError("subsystem matrix must be square and nonempty");
  }
  validate_terms(dimension(), terms_);
  terms_ = merged(std::move(terms_));
}

Subsystem Subsystem::linear(Mat A) {
  return Subsystem(SubsystemKind::Linear, std::move(A), {});
}

Subsystem Subsystem::polynomial(Mat linear_part,
                                std::vector<MonomialTerm> terms) {
  return Subsystem(SubsystemKind::Polynomial, std::move(linear_part),
                   std::move(terms));
}

Vec Subsystem::evaluate(const Vec& x) const {
  if (x.size() != matrix_.rows()) {
    throw InputError("evaluate: state dimension mismatch");
  }
  Vec out = matrix_ * x;
  for (const auto& t : terms_) {
    double mono = t.coeff;
    for (int j = 0; j < x.size(); ++j) {
      for (int e = 0; e < t.exponents[j]; ++e) mono *= x(j);
    }
    out(t.target) += mono;
  }
  return out;
}

double jacobian_origin_fd_deviation(const Subsystem& s, double step) {
  const int d = s.dimension();
  double worst = 0.0;
  for (int j = 0; j < d; ++j) {
    const Vec fp = s.evaluate(step * Vec::Unit(d, j));
    const Vec fm = s.evaluate(-step * Vec::Unit(d, j));
    const Vec col = (fp - fm) / (2.0 * step);
    worst = std::max(worst, (col - s.matrix().col(j)).cwiseAbs().maxCoeff());
  }
  return worst;
}

SpectralResult is_hurwitz(const Mat& A, double margin) {
  if (A.rows() != A.cols()) throw InputError("is_hurwitz: matrix not square");
  if (margin < 0.0) throw InputError("is_hurwitz: margin must be >= 0");
  Eigen::EigenSolver<Mat> solver(A, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "is_hurwitz: eigenvalue iteration failed on " << A.rows() << "x"
        << A.cols() << " matrix (||A|| = " << A.norm() << ")";
    throw NumericalError(msg.str());
  }
  const double abscissa = solver.eigenvalues().real().maxCoeff();
  return {abscissa < -margin, abscissa};
}

int SwitchedSystem::dimension() const {
  if (subsystems.empty()) throw InputError("switched system has no subsystems");
  return subsystems.front().dimension();
}

void SwitchedSystem::validate() const {
  const int d = dimension();
  for (const auto& s : subsystems) {
    if (s.dimension() != d) {
      throw InputError("switched system: subsystem dimensions differ");
    }
  }
  if (dimension_of(lyapunov) != d) {
    throw InputError("switched system: Lyapunov dimension mismatch");
  }
}

Subsystem convex_combination(const SwitchedSystem& sys, const Vec& weights) {
  const int p = static_cast<int>(sys.subsystems.size());
  if (weights.size() != p) {
    throw InputError("convex_combination: weight count != subsystem count");
  }
  double sum = 0.0;
  for (int i = 0; i < p; ++i) {
    if (weights(i) < 0.0) {
      throw InputError("convex_combination: negative weight");
    }
    sum += weights(i);
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InputError("convex_combination: weights must sum to 1");
  }
  const int d = sys.dimension();
  Mat A = Mat::Zero(d, d);
  std::vector<MonomialTerm> terms;
  for (int i = 0; i < p; ++i) {
    const auto& s = sys.subsystems[i];
    A += weights(i) * s.matrix();
    for (const auto& t : s.terms()) {
      if (weights(i) == 0.0) continue;
      terms.push_back({t.target, weights(i) * t.coeff, t.exponents});
    }
  }
  // Kind mirrors the surviving content: a combination whose higher-order
  // terms cancel is plain linear.
  Subsystem combined = Subsystem::polynomial(std::move(A), std::move(terms));
  if (combined.terms().empty()) return Subsystem::linear(combined.matrix());
  return combined;
}

}  // namespace switchrate
