#pragma once

#include <Eigen/Dense>

namespace switchrate {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Library version string embedded in emitted certificates and reports.
const char* version();

}  // namespace switchrate
