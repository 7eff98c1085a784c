#include "entangler/protocol.hpp"

#include <cmath>

#include "entangler/dynamics.hpp"
#include "entangler/errors.hpp"
#include "entangler/kernels.hpp"

namespace entangler {

namespace {

constexpr cdouble kI{0.0, 1.0};
constexpr double kSqrtHalf = 0.7071067811865476;

// Ising z-phase of subspace basis vector k for couplings J/Gamma.
double ising_phase(int k, const std::array<double, 3>& j) {
  const int s = kSubspaceIndex[k];
  const int z1 = ((s >> 2) & 1) ? -1 : 1;
  const int z2 = ((s >> 1) & 1) ? -1 : 1;
  const int z3 = (s & 1) ? -1 : 1;
  return j[0] * z1 * z2 + j[1] * z2 * z3 + j[2] * z3 * z1;
}

}  // namespace

ProtocolOutcome run_protocol(double tau_off, double gamma_over_laser,
                             const ProtocolOptions& opt) {
  if (tau_off < 0.0) throw ValidationError("tau_off must be >= 0");

  SubspaceState cond =
      evolve_dissipative(SubspaceState::basis_state(0), tau_off,
                         gamma_over_laser);

  // After turn-off only the Ising terms act; they add z-phases that
  // leave the measurement statistics untouched.
  if (opt.post_off_tau != 0.0)
    for (int k = 0; k < 6; ++k)
      cond.c(k) *= std::exp(-kI * ising_phase(k, opt.j_over_laser) *
                            opt.post_off_tau);

  ProtocolOutcome out;
  out.turn_off_tau = tau_off;
  out.p_no_decay = cond.norm_sq();
  if (out.p_no_decay <= 0.0)
    throw NumericError("conditional state has vanished");
  const Vec6 c = cond.c / std::sqrt(out.p_no_decay);

  // Atom 1 in |g>: phi3=|geg>, phi4=|gee>, phi5=|gge>.
  out.p_ground = std::norm(c(2)) + std::norm(c(3)) + std::norm(c(4));
  out.p_excited = std::norm(c(0)) + std::norm(c(1)) + std::norm(c(5));
  out.p_success = out.p_no_decay * out.p_ground;

  // The Bell-success outcome keeps the single-excitation sector of atoms
  // 2,3 (|geg> and |gge>); the |gee> component belongs to the failure
  // side of the Bell measurement. With c3 = c5 (the 2<->3 symmetry) the
  // renormalized sector state is exactly |Psi+> for every gamma and
  // tau_off, which is why the fidelity is decay-independent.
  const double bell_sector = std::norm(c(2)) + std::norm(c(4));
  if (bell_sector > 1e-12) {
    const double n = std::sqrt(bell_sector);
    // Atoms 2,3 basis (|ee>, |eg>, |ge>, |gg>).
    out.post_success_state << cdouble(0.0), c(2) / n, c(4) / n, cdouble(0.0);
    const cdouble bell = kSqrtHalf * (out.post_success_state(1) +
                                      out.post_success_state(2));
    out.fidelity_bell = std::norm(bell);
  }

  if (out.p_excited > 1e-12) {
    const double n = std::sqrt(out.p_excited);
    SubspaceState fail;
    fail.c(0) = c(0) / n;
    fail.c(1) = c(1) / n;
    fail.c(5) = c(5) / n;
    out.post_failure_state = embed(fail);
    out.fidelity_recover = std::norm(fail.c(0));
  }
  return out;
}

std::vector<CurvePoint> success_probability_curve(
    const std::vector<double>& tau_grid, double gamma_over_laser) {
  if (gamma_over_laser == 0.0) {
    // Closed-form fast path: P = 2 c3^2 and the state stays normalized.
    const std::size_t n = tau_grid.size();
    std::vector<double> c1(n), c2i(n), c3(n), c4i(n);
    kernels::closed_form_grid(tau_grid.data(), n, c1.data(), c2i.data(),
                              c3.data(), c4i.data());
    std::vector<CurvePoint> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i].tau = tau_grid[i];
      out[i].p_joint = 2.0 * c3[i] * c3[i];
      out[i].p_conditioned = out[i].p_joint;
    }
    return out;
  }

  const std::vector<SubspaceState> states = evolve_dissipative_grid(
      SubspaceState::basis_state(0), tau_grid, gamma_over_laser);

  std::vector<CurvePoint> out;
  out.reserve(states.size());
  for (size_t i = 0; i < states.size(); ++i) {
    const Vec6& c = states[i].c;
    CurvePoint pt;
    pt.tau = tau_grid[i];
    pt.p_joint = std::norm(kSqrtHalf * (c(2) + c(4)));
    const double nsq = states[i].norm_sq();
    pt.p_conditioned = nsq > 0.0 ? pt.p_joint / nsq : 0.0;
    out.push_back(pt);
  }
  return out;
}

std::pair<double, double> find_peak(
    const std::vector<CurvePoint>& curve,
    const std::function<double(double)>& evaluator) {
  if (curve.empty()) throw ValidationError("curve must be nonempty");

  size_t best = 0;
  for (size_t i = 1; i < curve.size(); ++i)
    if (curve[i].p_joint > curve[best].p_joint) best = i;  // ties keep smallest tau

  double lo = curve[best > 0 ? best - 1 : 0].tau;
  double hi = curve[best + 1 < curve.size() ? best + 1 : best].tau;
  if (hi - lo < 1e-12) return {curve[best].tau, curve[best].p_joint};

  // Golden-section search for the maximum of the continuous evaluator.
  const double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = evaluator(x1), f2 = evaluator(x2);
  while (b - a > 1e-6) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = evaluator(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = evaluator(x2);
    }
  }
  const double tau_star = 0.5 * (a + b);
  const double p_star = evaluator(tau_star);
  if (p_star >= curve[best].p_joint) return {tau_star, p_star};
  return {curve[best].tau, curve[best].p_joint};
}

std::pair<double, double> find_peak(const std::vector<double>& tau_grid,
                                    double gamma_over_laser) {
  const std::vector<CurvePoint> curve =
      success_probability_curve(tau_grid, gamma_over_laser);
  auto evaluator = [gamma_over_laser](double tau) {
    const SubspaceState s = evolve_dissipative(SubspaceState::basis_state(0),
                                               tau, gamma_over_laser);
    return std::norm(kSqrtHalf * (s.c(2) + s.c(4)));
  };
  return find_peak(curve, evaluator);
}

}  // namespace entangler
