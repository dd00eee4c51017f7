#pragma once

#include "geoquant/correspondence.hpp"
#include "geoquant/phase_space.hpp"

namespace geoquant::testing {

// Single oscillator fixture: ordering (q, p), bracket [xi, tau] = xi_p tau_q.
inline Mat e1_bracket() {
  Mat T = Mat::Zero(2, 2);
  T(1, 0) = 1.0;
  return T;
}

inline PhaseSpace e1() { return build_phase_space(e1_bracket()); }

// Standard structure for E1.
inline Mat j0() {
  Mat J(2, 2);
  J << 0, 1, -1, 0;
  return J;
}

// Sheared structure with vacuum form S=[1], A=[-1].
inline Mat j2() {
  Mat J(2, 2);
  J << -1, 1, -2, 1;
  return J;
}

// Scaled oscillator structure with vacuum form S=[m], A=[0].
inline Mat jm(double m) {
  Mat J(2, 2);
  J << 0, 1.0 / m, -m, 0;
  return J;
}

inline Mat block_e1(int copies) {
  Mat T = Mat::Zero(2 * copies, 2 * copies);
  for (int k = 0; k < copies; ++k) T(2 * k + 1, 2 * k) = 1.0;
  return T;
}

}  // namespace geoquant::testing
