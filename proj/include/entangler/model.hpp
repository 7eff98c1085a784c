#pragma once

#include <array>
#include <complex>

namespace entangler {

using cdouble = std::complex<double>;

/// Experiment-level inputs. All frequencies are expressed in one common
/// unit w0 chosen by the caller; the dynamics layer works in the
/// dimensionless time tau = Gamma*t.
struct PhysicalParams {
  double g = 1.0;       // atom-cavity coupling strength
  double delta = 20.0;  // atom-cavity detuning
  double kappa = 20.0;  // cavity leaking rate

  // Drive amplitudes on cavities 1..3.
  std::array<cdouble, 3> eps{cdouble{1.0}, cdouble{1.0}, cdouble{1.0}};

  // Fiber propagation phases, ordered (phi_21, phi_32, phi_13).
  std::array<double, 3> phi{1.5707963267948966, 1.5707963267948966,
                            1.5707963267948966};

  double gamma_laser = 1e-9;  // local laser drive Gamma on the atoms
  double gamma_spont = 0.0;   // atomic spontaneous emission rate

  double nu = 0.0;  // fiber decay per meter
  std::array<double, 3> fiber_lengths{0.0, 0.0, 0.0};  // L_21, L_32, L_13

  // Per-link amplitude attenuation exp(-nu*L), attached wherever the
  // corresponding exp(i*phi) appears. Unity until apply_fiber_loss.
  std::array<double, 3> link_attenuation{1.0, 1.0, 1.0};
};

/// Effective Ising-ring couplings derived from the physical parameters.
struct CouplingSet {
  double chi = 0.0;                // g^2 / delta
  cdouble m;                       // i*delta + kappa
  cdouble w_cubed;                 // kappa^3 * f21*f32*f13
  std::array<cdouble, 3> alpha{};  // drive-induced field amplitudes
  std::array<double, 3> j{};       // J_12, J_23, J_31
  bool symmetric = false;          // alphas and Js collapse to one value
};

/// Advisory thresholds for the regime checks; the model only states the
/// inequalities qualitatively, so these are overridable defaults.
struct RegimeThresholds {
  double much_greater = 10.0;  // x >> y taken as x/y >= 10
  double much_less = 0.1;      // x << y taken as x/y <= 0.1
  double approx_rel = 0.5;     // x ~= y taken as |x-y|/y <= 0.5
};

struct RegimeReport {
  double delta_over_g = 0.0;
  double kappa_over_g = 0.0;
  double detuning_mismatch = 0.0;  // |delta - kappa| / kappa
  double gamma_over_min_j = 0.0;   // Gamma / min|J_ij|
  bool delta_large_ok = false;
  bool kappa_large_ok = false;
  bool delta_kappa_close_ok = false;
  bool adiabatic_ok = false;
  bool all_ok() const {
    return delta_large_ok && kappa_large_ok && delta_kappa_close_ok &&
           adiabatic_ok;
  }
};

/// Evaluates the effective couplings J_ij and field amplitudes alpha_i.
/// Throws DegenerateDenominator when |M^3 - W^3| falls below
/// 1e-12 * kappa^3, where the adiabatic expressions blow up.
CouplingSet derive_couplings(const PhysicalParams& p);

/// Returns a copy of p with link_attenuation set to exp(-nu*L) per fiber,
/// i.e. the substitution exp(i*phi) -> exp(i*phi - nu*L) on every link.
PhysicalParams apply_fiber_loss(const PhysicalParams& p);

/// Advisory regime checks; reports ratios and flags, never throws.
RegimeReport validate_regime(const PhysicalParams& p, const CouplingSet& c,
                             const RegimeThresholds& t = {});

}  // namespace entangler
