#pragma once

#include <array>
#include <vector>

#include "entangler/model.hpp"
#include "entangler/states.hpp"

namespace entangler {

/// Eigensystem of the secular Hamiltonian restricted to the subspace.
/// Immutable after construction; energies ascend and are multiples of
/// the drive strength Gamma: {-2G, -G, -G, +G, +G, +2G}.
struct SpectralDecomposition {
  std::array<double, 6> energies{};  // ascending
  Mat6 vectors;                      // orthonormal eigenvectors, by column
  Mat6 s_matrix;                     // basis -> eigenbasis change, unitary
  double gamma = 0.0;                // drive strength the input was built with
};

/// H_eff = J12 s1z s2z + J23 s2z s3z + J31 s3z s1z + Gamma sum_i s_i^x,
/// dense 8x8 in the ThreeSpinState basis.
Mat8 build_ising_hamiltonian(const CouplingSet& c, double gamma_laser);

/// Secular part: (G/2)[s1x(1 - s2z s3z) + s2x(1 - s3z s1z) + s3x(1 - s1z s2z)].
/// Flips a spin iff its ring neighbors are opposite.
Mat8 build_secular_hamiltonian(double gamma_laser);

/// The 6x6 restriction of the secular Hamiltonian to the subspace basis:
/// Gamma on the six-cycle adjacency pattern.
Mat6 secular_subspace_matrix(double gamma_laser);

/// Analytic eigensystem of the 6x6 secular matrix. The degenerate +-Gamma
/// pairs use the analytic vectors, orthonormalized within each eigenspace
/// (the raw analytic pairs are not mutually orthogonal; the spectral
/// projectors are unchanged). Throws NotTheSecularMatrix when the input
/// deviates from the six-cycle sparsity pattern beyond 1e-10 * Gamma.
SpectralDecomposition eigensystem(const Mat6& h6);

/// Closed-form coefficients for the initial state |egg> as functions of
/// dimensionless time tau = Gamma*t. The two-excitation components
/// c2, c4, c6 carry the quadrature factor i relative to the printed
/// trigonometric forms; with it the closed form agrees with the spectral
/// propagator to machine precision (the magnitudes are unchanged).
SubspaceState closed_form_coefficients(double tau);

/// Unitary evolution c(tau) = V exp(-i E tau / Gamma) V^dagger c(0).
SubspaceState evolve_spectral(const SubspaceState& psi0, double tau,
                              const SpectralDecomposition& sd);

enum class DissipativeMethod {
  kMatrixExponential,  // scaling-and-squaring, exact up to series tolerance
  kFixedStepRk4,       // h = 1e-3 / Gamma with Richardson error check
};

/// No-decay conditional evolution under H_s = -i*gamma*sum_i |e><e|_i + H~,
/// restricted to the subspace. Returns the unnormalized conditional state;
/// its squared norm is the no-decay probability. gamma_over_laser is
/// gamma / Gamma; tau is dimensionless. Throws StepFailure when the RK4
/// Richardson estimate exceeds tolerance, ConvergenceFailure when the
/// exponential series does not converge.
SubspaceState evolve_dissipative(
    const SubspaceState& psi0, double tau, double gamma_over_laser,
    DissipativeMethod method = DissipativeMethod::kMatrixExponential);

/// Conditional states at every point of an increasing tau grid, evolved
/// cumulatively (one short-step propagator per interval).
std::vector<SubspaceState> evolve_dissipative_grid(
    const SubspaceState& psi0, const std::vector<double>& tau_grid,
    double gamma_over_laser);

}  // namespace entangler
