#include "entangler/oracle.hpp"

#include <cmath>

#include "entangler/errors.hpp"

namespace entangler::oracle {

namespace {

constexpr cdouble kI{0.0, 1.0};

// Diagonal Pade [6/6] approximant of exp(A) with scaling and squaring.
Mat8 expm8_pade(Mat8 a) {
  double nrm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (nrm > 0.5 && squarings < 60) {
    a *= 0.5;
    nrm *= 0.5;
    ++squarings;
  }
  if (nrm > 0.5) throw ConvergenceFailure("cannot scale matrix into range");

  // p(A) = sum_k c_k A^k, q(A) = p(-A); c_k from the [6/6] recurrence.
  constexpr int q = 6;
  double c[q + 1];
  c[0] = 1.0;
  for (int k = 1; k <= q; ++k)
    c[k] = c[k - 1] * static_cast<double>(q - k + 1) /
           static_cast<double>(k * (2 * q - k + 1));

  Mat8 power = Mat8::Identity();
  Mat8 num = c[0] * Mat8::Identity();
  Mat8 den = c[0] * Mat8::Identity();
  for (int k = 1; k <= q; ++k) {
    power = (power * a).eval();
    num += c[k] * power;
    den += ((k % 2 == 0) ? c[k] : -c[k]) * power;
  }
  Mat8 result = den.partialPivLu().solve(num);
  if (!result.allFinite()) throw ConvergenceFailure("Pade solve failed");
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

Vec8 rk4_run(const Mat8& h_matrix, Vec8 psi, double t, long steps) {
  const Mat8 gen = -kI * h_matrix;
  const double dt = t / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) {
    const Vec8 k1 = gen * psi;
    const Vec8 k2 = gen * (psi + 0.5 * dt * k1);
    const Vec8 k3 = gen * (psi + 0.5 * dt * k2);
    const Vec8 k4 = gen * (psi + dt * k3);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

void richardson_check(const Vec8& coarse, const Vec8& fine, double step,
                      double t, const Mat8& h_matrix) {
  const double hnorm = h_matrix.cwiseAbs().rowwise().sum().maxCoeff();
  const double bound =
      10.0 * std::pow(step, 4) * (1.0 + std::abs(t) * std::pow(hnorm, 5));
  if ((coarse - fine).norm() > bound)
    throw StepFailure("RK4 h vs h/2 disagreement exceeds the bound");
}

}  // namespace

ThreeSpinState expm_propagate(const Mat8& h, const ThreeSpinState& psi0,
                              double t) {
  if (!h.allFinite()) throw ValidationError("Hamiltonian has non-finite entries");
  ThreeSpinState out;
  out.amp = expm8_pade((-kI * t) * h) * psi0.amp;
  return out;
}

ThreeSpinState rk4_propagate(const Mat8& h, const ThreeSpinState& psi0,
                             double t, double step) {
  if (!(step > 0.0)) throw ValidationError("step must be > 0");
  const double ratio = t / step;
  const long steps = std::lround(ratio);
  if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-6)
    throw ValidationError("t/step must be a positive integer within rounding");

  const Vec8 coarse = rk4_run(h, psi0.amp, t, steps);
  const Vec8 fine = rk4_run(h, psi0.amp, t, 2 * steps);
  richardson_check(coarse, fine, step, t, h);
  ThreeSpinState out;
  out.amp = fine;
  return out;
}

std::vector<ThreeSpinState> rk4_trajectory(const Mat8& h,
                                           const ThreeSpinState& psi0,
                                           const std::vector<double>& t_grid,
                                           double step) {
  std::vector<ThreeSpinState> out;
  out.reserve(t_grid.size());
  Vec8 psi = psi0.amp;
  Vec8 psi_half = psi0.amp;  // parallel h/2 integration for the check
  double prev = 0.0;
  double max_step = 0.0;
  for (double t : t_grid) {
    const double dt = t - prev;
    if (dt < 0.0) throw ValidationError("time grid must be increasing");
    if (dt > 0.0) {
      const long steps = std::max<long>(1, std::lround(dt / step));
      psi = rk4_run(h, psi, dt, steps);
      psi_half = rk4_run(h, psi_half, dt, 2 * steps);
      max_step = std::max(max_step, dt / static_cast<double>(steps));
    }
    ThreeSpinState st;
    st.amp = psi_half;
    out.push_back(st);
    prev = t;
  }
  if (!t_grid.empty() && max_step > 0.0)
    richardson_check(psi, psi_half, max_step, prev, h);
  return out;
}

}  // namespace entangler::oracle
