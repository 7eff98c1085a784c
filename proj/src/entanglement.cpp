#include "entangler/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "entangler/dynamics.hpp"
#include "entangler/errors.hpp"

namespace entangler {

namespace {

void require_normalized(const ThreeSpinState& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-8)
    throw NotNormalized("state norm " + std::to_string(psi.norm()));
}

int bit(int s, int atom) { return (s >> (2 - atom)) & 1; }

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Concurrence of the reduced pair (a, b) of a pure three-spin state.
double pair_concurrence(const ThreeSpinState& psi, int a, int b) {
  return concurrence(reduced_density_pair(psi, a, b));
}

}  // namespace

Mat2 reduced_density_one(const ThreeSpinState& psi, int atom) {
  require_normalized(psi);
  Mat2 rho = Mat2::Zero();
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t) {
      // Traced atoms must match between bra and ket.
      if ((s & ~(1 << (2 - atom))) != (t & ~(1 << (2 - atom)))) continue;
      rho(bit(s, atom), bit(t, atom)) += psi.amp(s) * std::conj(psi.amp(t));
    }
  return rho;
}

Mat4 reduced_density_pair(const ThreeSpinState& psi, int atom_a, int atom_b) {
  require_normalized(psi);
  const int traced = 3 - atom_a - atom_b;
  Mat4 rho = Mat4::Zero();
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t) {
      if (bit(s, traced) != bit(t, traced)) continue;
      const int row = bit(s, atom_a) * 2 + bit(s, atom_b);
      const int col = bit(t, atom_a) * 2 + bit(t, atom_b);
      rho(row, col) += psi.amp(s) * std::conj(psi.amp(t));
    }
  return rho;
}

double concurrence(const Mat4& rho) {
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 ||
      std::abs(rho.trace().imag()) > 1e-8)
    throw InvalidDensity("trace deviates from 1");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw InvalidDensity("matrix is not Hermitian");
  {
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
      throw InvalidDensity("matrix is not positive semidefinite");
  }

  // sigma_y x sigma_y in the (e, g) convention [[0, -i], [i, 0]].
  Mat4 yy = Mat4::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  const Mat4 r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Mat4> es(r, false);
  // Eigenvalues that are zero in exact arithmetic (rank-deficient rho)
  // come back as O(eps * scale) roundoff; taking their square roots
  // would inject O(sqrt(eps)) noise into the differences below, so
  // anything below a relative floor is treated as exactly zero.
  const double floor = 1e-12 * es.eigenvalues().cwiseAbs().maxCoeff();
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) {
    double ev = es.eigenvalues()(i).real();
    if (ev < -1e-8) throw InvalidDensity("spectrum of rho rho~ is negative");
    lam[i] = ev > floor ? std::sqrt(ev) : 0.0;
  }
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double tangle_one_rest(const ThreeSpinState& psi, int atom) {
  const Mat2 rho = reduced_density_one(psi, atom);
  const double via_det = 4.0 * rho.determinant().real();
  const double via_purity = 2.0 * (1.0 - (rho * rho).trace().real());
  if (std::abs(via_det - via_purity) > 1e-12)
    throw NumericError("tangle expressions disagree beyond tolerance");
  return clamp01(via_det);
}

double three_tangle(const ThreeSpinState& psi, int atom) {
  const int b = (atom + 1) % 3, c = (atom + 2) % 3;
  const double cab = pair_concurrence(psi, atom, b);
  const double cac = pair_concurrence(psi, atom, c);
  const double residual = tangle_one_rest(psi, atom) - cab * cab - cac * cac;
  if (residual < -1e-9)
    throw NumericError("three-tangle residual is negative beyond tolerance");
  return clamp01(residual);
}

EntanglementReport analyze(const ThreeSpinState& psi) {
  EntanglementReport r;
  r.c_pair = {pair_concurrence(psi, 0, 1), pair_concurrence(psi, 0, 2),
              pair_concurrence(psi, 1, 2)};
  for (int a = 0; a < 3; ++a) {
    r.tangle_one_rest[a] = tangle_one_rest(psi, a);
    r.c_three[a] = three_tangle(psi, a);
  }
  return r;
}

std::vector<EntanglementReport> entanglement_timeseries(
    const std::vector<double>& tau_grid, double gamma_over_laser) {
  const SubspaceState initial = SubspaceState::basis_state(0);  // |egg>
  const std::vector<SubspaceState> states =
      evolve_dissipative_grid(initial, tau_grid, gamma_over_laser);

  std::vector<EntanglementReport> out;
  out.reserve(states.size());
  for (const SubspaceState& s : states) {
    // The conditional state may be sub-normalized; entanglement is
    // evaluated on the renormalized state, the norm is a probability
    // that belongs to the protocol layer.
    ThreeSpinState psi = embed(s);
    psi.amp /= psi.norm();
    out.push_back(analyze(psi));
  }
  return out;
}

}  // namespace entangler
