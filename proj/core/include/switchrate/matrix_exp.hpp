#pragma once

#include "switchrate/types.hpp"

namespace switchrate {

/// e^{tA} by scaling-and-squaring with a degree-13 Pade approximant.
/// Throws NumericalError when the result overflows to nonfinite values.
Mat matrix_exponential(const Mat& A, double t = 1.0);

}  // namespace switchrate
