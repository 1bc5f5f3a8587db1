#include "switchrate/builtin.hpp"

namespace switchrate {

namespace {

Mat b1() {
  Mat B(2, 2);
  B << 0.0, -1.0, 1.0, -1.0;
  return B;
}

Mat b2() {
  Mat B(2, 2);
  B << 0.0, 1.0, -1.0, -1.0;
  return B;
}

// The cubic damping -|x|^2 x on top of the linear part B.
std::vector<MonomialTerm> damping_terms() {
  return {
      {0, -1.0, {3, 0}},  // -x1^3
      {0, -1.0, {1, 2}},  // -x1 x2^2
      {1, -1.0, {2, 1}},  // -x1^2 x2
      {1, -1.0, {0, 3}},  // -x2^3
  };
}

}  // namespace

SwitchedSystem builtin_two_spiral_system() {
  return SwitchedSystem{
      {Subsystem::linear(b1()), Subsystem::linear(b2())},
      QuadraticForm(Mat::Identity(2, 2)),
  };
}

SwitchedSystem builtin_cubic_damped_system() {
  std::vector<ScalarTerm> vterms = {
      {1.0, {2, 0}},  // x1^2
      {1.0, {0, 2}},  // x2^2
  };
  return SwitchedSystem{
      {Subsystem::polynomial(b1(), damping_terms()),
       Subsystem::polynomial(b2(), damping_terms())},
      PolynomialForm(2, std::move(vterms)),
  };
}

}  // namespace switchrate
