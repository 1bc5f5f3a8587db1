#include "switchrate/matrix_exp.hpp"

#include <Eigen/LU>
#include <cmath>

#include "switchrate/errors.hpp"

namespace switchrate {

namespace {

// 13/13 Pade approximant of exp(A), valid for ||A||_1 <= ~5.37.
Mat pade13(const Mat& A) {
  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const auto n = A.rows();
  const Mat I = Mat::Identity(n, n);
  const Mat A2 = A * A;
  const Mat A4 = A2 * A2;
  const Mat A6 = A4 * A2;
  const Mat U =
      A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 +
           b[3] * A2 + b[1] * I);
  const Mat W = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 +
                b[4] * A4 + b[2] * A2 + b[0] * I;
  Eigen::PartialPivLU<Mat> lu(W - U);
  return lu.solve(W + U);
}

}  // namespace

Mat matrix_exponential(const Mat& A, double t) {
  if (A.rows() != A.cols() || A.rows() < 1) {
    throw InputError("matrix_exponential: matrix must be square and nonempty");
  }
  if (!A.allFinite() || !std::isfinite(t)) {
    throw NumericalError("matrix_exponential: nonfinite input");
  }
  Mat B = t * A;
  const double norm1 = B.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  const double theta13 = 5.371920351148152;
  if (norm1 > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    B /= std::ldexp(1.0, squarings);
  }
  Mat E = pade13(B);
  for (int i = 0; i < squarings; ++i) E = E * E;
  if (!E.allFinite()) {
    throw NumericalError("matrix_exponential: result overflowed");
  }
  return E;
}

}  // namespace switchrate
