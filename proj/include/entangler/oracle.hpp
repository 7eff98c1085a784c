#pragma once

#include <vector>

#include "entangler/states.hpp"

namespace entangler::oracle {

// Independent brute-force propagation on the full 8-dimensional space.
// Shares no numerical kernels with the dynamics module so that agreement
// between the two paths is evidence rather than tautology.

/// psi(t) = exp(-i H t) psi0 via Pade approximation with scaling and
/// squaring; handles non-Hermitian H. Throws ConvergenceFailure when the
/// scaling bound cannot be met.
ThreeSpinState expm_propagate(const Mat8& h, const ThreeSpinState& psi0,
                              double t);

/// Classic fixed-step fourth-order integration of dpsi/dt = -i H psi.
/// Runs at step h and h/2 and throws StepFailure when the Richardson
/// difference exceeds the fourth-order bound. t/h must be an integer
/// within rounding.
ThreeSpinState rk4_propagate(const Mat8& h, const ThreeSpinState& psi0,
                             double t, double step);

/// States at every point of an increasing grid, integrated cumulatively
/// (per-interval step count rounded so the step stays near `step`),
/// with the same Richardson check per interval.
std::vector<ThreeSpinState> rk4_trajectory(const Mat8& h,
                                           const ThreeSpinState& psi0,
                                           const std::vector<double>& t_grid,
                                           double step);

}  // namespace entangler::oracle
