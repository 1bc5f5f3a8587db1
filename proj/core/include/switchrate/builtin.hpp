#pragma once

#include "switchrate/subsystem.hpp"

namespace switchrate {

/// The two-matrix demo system: B1 = [[0,-1],[1,-1]], B2 = [[0,1],[-1,-1]],
/// V = |x|^2. Both matrices are Hurwitz and share V as a weak Lyapunov
/// function, yet the mean (B1+B2)/2 is not Hurwitz, so stability holds only
/// under dwell-time switching.
SwitchedSystem builtin_two_spiral_system();

/// The same pair embedded as polynomial fields f_i(x) = B_i x - |x|^2 x
/// (cubic damping) with polynomial V = |x|^2; exercises the nonlinear path.
SwitchedSystem builtin_cubic_damped_system();

}  // namespace switchrate
