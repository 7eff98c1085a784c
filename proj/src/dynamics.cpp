#include "entangler/dynamics.hpp"

#include <cmath>
#include <map>

#include "entangler/errors.hpp"

namespace entangler {

namespace {

constexpr cdouble kI{0.0, 1.0};

// sigma^z eigenvalue of atom `a` (0..2) in basis state `s`: +1 for e.
int zval(int s, int a) { return ((s >> (2 - a)) & 1) ? -1 : +1; }

// Basis state with atom `a` flipped.
int flip(int s, int a) { return s ^ (1 << (2 - a)); }

// exp(A) for a 6x6 matrix via truncated Taylor series with scaling and
// squaring. Deliberately a different algorithm from the oracle module's
// Pade propagator.
Mat6 expm6_taylor(Mat6 a) {
  int squarings = 0;
  double nrm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (nrm > 0.5 && squarings < 60) {
    a *= 0.5;
    nrm *= 0.5;
    ++squarings;
  }
  if (nrm > 0.5) throw ConvergenceFailure("matrix norm too large to scale");

  Mat6 result = Mat6::Identity();
  Mat6 term = Mat6::Identity();
  bool converged = false;
  for (int k = 1; k <= 40; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-17) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceFailure("exponential series did not settle");
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

// Subspace generator of the conditional evolution, in units of Gamma:
// H_s / Gamma = C6-cycle - i * (gamma/Gamma) * diag(n_exc).
Mat6 conditional_generator(double gamma_over_laser) {
  Mat6 h = secular_subspace_matrix(1.0);
  for (int k = 0; k < 6; ++k)
    h(k, k) -= kI * gamma_over_laser * static_cast<double>(kSubspaceExcitations[k]);
  return h;
}

Vec6 rk4_step6(const Mat6& minus_i_h, const Vec6& c, double h) {
  const Vec6 k1 = minus_i_h * c;
  const Vec6 k2 = minus_i_h * (c + 0.5 * h * k1);
  const Vec6 k3 = minus_i_h * (c + 0.5 * h * k2);
  const Vec6 k4 = minus_i_h * (c + h * k3);
  return c + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Vec6 rk4_run6(const Mat6& minus_i_h, Vec6 c, double tau, long steps) {
  const double h = tau / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) c = rk4_step6(minus_i_h, c, h);
  return c;
}

}  // namespace

Mat8 build_ising_hamiltonian(const CouplingSet& c, double gamma_laser) {
  Mat8 h = Mat8::Zero();
  for (int s = 0; s < 8; ++s) {
    h(s, s) = c.j[0] * zval(s, 0) * zval(s, 1) + c.j[1] * zval(s, 1) * zval(s, 2) +
              c.j[2] * zval(s, 2) * zval(s, 0);
    for (int a = 0; a < 3; ++a) h(flip(s, a), s) += gamma_laser;
  }
  return h;
}

Mat8 build_secular_hamiltonian(double gamma_laser) {
  Mat8 h = Mat8::Zero();
  for (int s = 0; s < 8; ++s) {
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      // Flip of atom a allowed only when its ring neighbors are opposite.
      h(flip(s, a), s) +=
          0.5 * gamma_laser * (1.0 - zval(s, b) * zval(s, c));
    }
  }
  return h;
}

Mat6 secular_subspace_matrix(double gamma_laser) {
  Mat6 h = Mat6::Zero();
  for (int k = 0; k < 6; ++k) {
    h(k, (k + 1) % 6) = gamma_laser;
    h((k + 1) % 6, k) = gamma_laser;
  }
  return h;
}

SpectralDecomposition eigensystem(const Mat6& h6) {
  // Recover Gamma from the cycle entries and verify the sparsity pattern.
  double gamma = 0.0;
  for (int k = 0; k < 6; ++k) gamma += std::real(h6(k, (k + 1) % 6));
  gamma /= 6.0;
  if (!(gamma > 0.0))
    throw NotTheSecularMatrix("cycle coupling is not positive");
  const double tol = 1e-10 * gamma;
  for (int r = 0; r < 6; ++r) {
    for (int col = 0; col < 6; ++col) {
      const int d = (r - col + 6) % 6;
      const cdouble expected = (d == 1 || d == 5) ? cdouble(gamma) : cdouble(0);
      if (std::abs(h6(r, col) - expected) > tol)
        throw NotTheSecularMatrix("entry (" + std::to_string(r) + "," +
                                  std::to_string(col) +
                                  ") deviates from the secular pattern");
    }
  }

  SpectralDecomposition sd;
  sd.gamma = gamma;
  sd.energies = {-2.0 * gamma, -gamma, -gamma, gamma, gamma, 2.0 * gamma};

  // Analytic eigenvectors; the degenerate +-Gamma partners are not
  // mutually orthogonal as written, so the second of each pair is
  // Gram-Schmidt projected (same spectral projectors).
  Eigen::Matrix<double, 6, 1> v;
  Mat6 vecs;
  v << 1, -1, 1, -1, 1, -1;
  vecs.col(0) = (v / std::sqrt(6.0)).cast<cdouble>();
  v << -1, 1, 0, -1, 1, 0;
  vecs.col(1) = (0.5 * v).cast<cdouble>();
  v << -1, 0, 1, -1, 0, 1;
  vecs.col(2) = (0.5 * v).cast<cdouble>();
  v << -1, -1, 0, 1, 1, 0;
  vecs.col(3) = (0.5 * v).cast<cdouble>();
  v << 1, 0, -1, -1, 0, 1;
  vecs.col(4) = (0.5 * v).cast<cdouble>();
  v << 1, 1, 1, 1, 1, 1;
  vecs.col(5) = (v / std::sqrt(6.0)).cast<cdouble>();

  for (int pair : {2, 4}) {
    const cdouble overlap = vecs.col(pair - 1).dot(vecs.col(pair));
    vecs.col(pair) -= overlap * vecs.col(pair - 1);
    vecs.col(pair).normalize();
  }

  sd.vectors = vecs;
  sd.s_matrix = vecs.adjoint();
  return sd;
}

SubspaceState closed_form_coefficients(double tau) {
  const double c1 = std::cos(tau), c2 = std::cos(2.0 * tau);
  const double s1 = std::sin(tau), s2 = std::sin(2.0 * tau);
  SubspaceState st;
  st.c(0) = (2.0 * c1 + c2) / 3.0;
  st.c(1) = -kI * (s1 + s2) / 3.0;
  st.c(2) = (-c1 + c2) / 3.0;
  st.c(3) = kI * (2.0 * s1 - s2) / 3.0;
  st.c(4) = st.c(2);
  st.c(5) = st.c(1);
  return st;
}

SubspaceState evolve_spectral(const SubspaceState& psi0, double tau,
                              const SpectralDecomposition& sd) {
  Vec6 eigen_coeffs = sd.s_matrix * psi0.c;
  for (int j = 0; j < 6; ++j)
    eigen_coeffs(j) *= std::exp(-kI * (sd.energies[j] / sd.gamma) * tau);
  SubspaceState out;
  out.c = sd.vectors * eigen_coeffs;
  return out;
}

SubspaceState evolve_dissipative(const SubspaceState& psi0, double tau,
                                 double gamma_over_laser,
                                 DissipativeMethod method) {
  if (gamma_over_laser < 0.0)
    throw ValidationError("gamma_over_laser must be >= 0");
  const Mat6 gen = conditional_generator(gamma_over_laser);

  if (method == DissipativeMethod::kMatrixExponential) {
    SubspaceState out;
    out.c = expm6_taylor((-kI * tau) * gen) * psi0.c;
    return out;
  }

  // Fixed-step RK4 at h = 1e-3 (in units of 1/Gamma), with a Richardson
  // h vs h/2 check on the result.
  const Mat6 minus_i_h = -kI * gen;
  const double h = 1e-3;
  const long steps = std::max<long>(1, std::lround(tau / h));
  const Vec6 coarse = rk4_run6(minus_i_h, psi0.c, tau, steps);
  const Vec6 fine = rk4_run6(minus_i_h, psi0.c, tau, 2 * steps);
  const double step = tau / static_cast<double>(steps);
  const double hnorm = gen.cwiseAbs().rowwise().sum().maxCoeff();
  const double bound =
      10.0 * std::pow(step, 4) * (1.0 + tau * std::pow(hnorm, 5));
  if ((coarse - fine).norm() > bound)
    throw StepFailure("RK4 Richardson estimate exceeds tolerance; reduce tau");
  SubspaceState out;
  out.c = fine;
  return out;
}

std::vector<SubspaceState> evolve_dissipative_grid(
    const SubspaceState& psi0, const std::vector<double>& tau_grid,
    double gamma_over_laser) {
  const Mat6 gen = conditional_generator(gamma_over_laser);
  std::vector<SubspaceState> out;
  out.reserve(tau_grid.size());

  // Interval propagators are cached; a uniform grid costs one expm.
  std::map<double, Mat6> propagators;
  Vec6 c = psi0.c;
  double prev = 0.0;
  for (double tau : tau_grid) {
    const double dt = tau - prev;
    if (dt < 0.0) throw ValidationError("tau grid must be increasing");
    if (dt > 0.0) {
      auto it = propagators.find(dt);
      if (it == propagators.end())
        it = propagators.emplace(dt, expm6_taylor((-kI * dt) * gen)).first;
      c = (it->second * c).eval();
    }
    SubspaceState st;
    st.c = c;
    out.push_back(st);
    prev = tau;
  }
  return out;
}

}  // namespace entangler
