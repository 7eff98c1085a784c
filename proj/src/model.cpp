#include "entangler/model.hpp"

#include <algorithm>
#include <cmath>

#include "entangler/errors.hpp"

namespace entangler {

namespace {

void check_params(const PhysicalParams& p) {
  if (!(p.g > 0.0)) throw ValidationError("g must be > 0");
  if (!(p.delta > 0.0)) throw ValidationError("delta must be > 0");
  if (!(p.kappa > 0.0)) throw ValidationError("kappa must be > 0");
  if (!(p.gamma_laser > 0.0)) throw ValidationError("gamma_laser must be > 0");
  if (p.gamma_spont < 0.0) throw ValidationError("gamma_spont must be >= 0");
  if (p.nu < 0.0) throw ValidationError("nu must be >= 0");
  for (double ph : p.phi)
    if (!std::isfinite(ph)) throw ValidationError("phi must be finite");
  for (double l : p.fiber_lengths)
    if (l < 0.0) throw ValidationError("fiber_lengths must be >= 0");
}

}  // namespace

CouplingSet derive_couplings(const PhysicalParams& p) {
  check_params(p);

  CouplingSet out;
  out.chi = p.g * p.g / p.delta;
  out.m = cdouble(p.kappa, p.delta);  // i*delta + kappa

  // Per-link factors exp(i*phi - nu*L); attenuation rides along wherever
  // the bare phase factor appears, including inside W^3.
  const cdouble f21 = std::polar(p.link_attenuation[0], p.phi[0]);
  const cdouble f32 = std::polar(p.link_attenuation[1], p.phi[1]);
  const cdouble f13 = std::polar(p.link_attenuation[2], p.phi[2]);

  const double k = p.kappa;
  const cdouble m = out.m;
  out.w_cubed = k * k * k * f21 * f32 * f13;

  const cdouble den = m * m * m - out.w_cubed;
  if (std::abs(den) <= 1e-12 * k * k * k)
    throw DegenerateDenominator(
        "M^3 - W^3 is degenerate for this phase/kappa/delta combination");

  const cdouble e1 = p.eps[0], e2 = p.eps[1], e3 = p.eps[2];
  out.alpha[0] = (m * m * e1 + k * k * f32 * f13 * e2 + m * k * f13 * e3) / den;
  out.alpha[1] = (m * m * e2 + k * k * f13 * f21 * e3 + m * k * f21 * e1) / den;
  out.alpha[2] = (m * m * e3 + k * k * f21 * f32 * e1 + m * k * f32 * e2) / den;

  const double pref = 2.0 * k * out.chi * out.chi;
  out.j[0] = pref * std::imag(out.alpha[0] * std::conj(out.alpha[1]) *
                              (m * f21 + k * f32 * f13) / den);
  out.j[1] = pref * std::imag(out.alpha[1] * std::conj(out.alpha[2]) *
                              (m * f32 + k * f13 * f21) / den);
  out.j[2] = pref * std::imag(out.alpha[2] * std::conj(out.alpha[0]) *
                              (m * f13 + k * f21 * f32) / den);

  const double a_scale = std::max(
      {std::abs(out.alpha[0]), std::abs(out.alpha[1]), std::abs(out.alpha[2])});
  const double j_scale =
      std::max({std::abs(out.j[0]), std::abs(out.j[1]), std::abs(out.j[2])});
  const double a_tol = 1e-12 * std::max(a_scale, 1e-300);
  const double j_tol = 1e-12 * std::max(j_scale, 1e-300);
  out.symmetric = std::abs(out.alpha[0] - out.alpha[1]) <= a_tol &&
                  std::abs(out.alpha[1] - out.alpha[2]) <= a_tol &&
                  std::abs(out.j[0] - out.j[1]) <= j_tol &&
                  std::abs(out.j[1] - out.j[2]) <= j_tol;
  return out;
}

PhysicalParams apply_fiber_loss(const PhysicalParams& p) {
  PhysicalParams out = p;
  for (int i = 0; i < 3; ++i)
    out.link_attenuation[i] =
        p.link_attenuation[i] * std::exp(-p.nu * p.fiber_lengths[i]);
  return out;
}

RegimeReport validate_regime(const PhysicalParams& p, const CouplingSet& c,
                             const RegimeThresholds& t) {
  RegimeReport r;
  r.delta_over_g = p.delta / p.g;
  r.kappa_over_g = p.kappa / p.g;
  r.detuning_mismatch = std::abs(p.delta - p.kappa) / p.kappa;
  const double min_j =
      std::min({std::abs(c.j[0]), std::abs(c.j[1]), std::abs(c.j[2])});
  r.gamma_over_min_j =
      min_j > 0.0 ? p.gamma_laser / min_j : std::numeric_limits<double>::infinity();
  r.delta_large_ok = r.delta_over_g >= t.much_greater;
  r.kappa_large_ok = r.kappa_over_g >= t.much_greater;
  r.delta_kappa_close_ok = r.detuning_mismatch <= t.approx_rel;
  r.adiabatic_ok = r.gamma_over_min_j <= t.much_less;
  return r;
}

}  // namespace entangler
