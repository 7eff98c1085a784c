#pragma once

#include <array>
#include <vector>

#include "entangler/states.hpp"

namespace entangler {

/// Pairwise concurrences, one-vs-rest tangles, and the intrinsic
/// three-partite entanglement for each focus atom. Entries are clamped
/// to [0, 1] after a tolerance check.
struct EntanglementReport {
  std::array<double, 3> c_pair{};           // C12, C13, C23
  std::array<double, 3> tangle_one_rest{};  // C_1(23), C_2(31), C_3(12)
  std::array<double, 3> c_three{};          // C_abc for focus a = 1, 2, 3
};

/// Reduced density matrix of a single atom (index 0..2). The state must
/// be normalized to 1e-8 (throws NotNormalized otherwise).
Mat2 reduced_density_one(const ThreeSpinState& psi, int atom);

/// Reduced density matrix of atoms a and b, ordered a (slow) x b (fast),
/// (e, g) within each factor.
Mat4 reduced_density_pair(const ThreeSpinState& psi, int atom_a, int atom_b);

/// Wootters concurrence C = max{0, l1 - l2 - l3 - l4} of a two-qubit
/// density matrix, with l_i the decreasing square roots of the
/// eigenvalues of rho (sy x sy) rho* (sy x sy). Eigenvalues above -1e-12
/// are clamped to zero before the square root. Throws InvalidDensity on
/// trace / Hermiticity / positivity violation beyond 1e-8.
double concurrence(const Mat4& rho);

/// Tangle between atom a and the remaining pair: 4 det(rho_a), which for
/// pure states equals 2(1 - Tr rho_a^2); both are computed and must agree
/// to 1e-12.
double tangle_one_rest(const ThreeSpinState& psi, int atom);

/// Intrinsic three-partite entanglement for focus atom a:
/// C_abc = C_a(bc) - C_ab^2 - C_ac^2, clamped to >= 0. The first term is
/// the unsquared tangle, which already equals the squared one-vs-rest
/// concurrence, so this is the standard residual tangle.
double three_tangle(const ThreeSpinState& psi, int atom);

/// Full report for one state.
EntanglementReport analyze(const ThreeSpinState& psi);

/// Evolves |egg> over the grid (dissipatively when gamma_over_laser > 0,
/// renormalizing before each measurement) and reports every point.
std::vector<EntanglementReport> entanglement_timeseries(
    const std::vector<double>& tau_grid, double gamma_over_laser);

}  // namespace entangler
