#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace entangler {

using cdouble = std::complex<double>;
using Vec6 = Eigen::Matrix<cdouble, 6, 1>;
using Vec8 = Eigen::Matrix<cdouble, 8, 1>;
using Mat2 = Eigen::Matrix<cdouble, 2, 2>;
using Mat4 = Eigen::Matrix<cdouble, 4, 4>;
using Mat6 = Eigen::Matrix<cdouble, 6, 6>;
using Mat8 = Eigen::Matrix<cdouble, 8, 8>;

// Basis conventions, fixed once for bit-exact tests:
//   single atom: index 0 = |e>, index 1 = |g>, sigma^z|e> = +|e>.
//   three atoms: index = s1*4 + s2*2 + s3 (atom 1 slowest).
inline constexpr int kExcited = 0;
inline constexpr int kGround = 1;

constexpr int basis_index(int s1, int s2, int s3) {
  return s1 * 4 + s2 * 2 + s3;
}

inline constexpr int kGGG = basis_index(1, 1, 1);
inline constexpr int kEEE = basis_index(0, 0, 0);

// Single-excitation/double-excitation subspace basis:
//   phi1=|egg>, phi2=|eeg>, phi3=|geg>, phi4=|gee>, phi5=|gge>, phi6=|ege>.
inline constexpr std::array<int, 6> kSubspaceIndex = {
    basis_index(0, 1, 1), basis_index(0, 0, 1), basis_index(1, 0, 1),
    basis_index(1, 0, 0), basis_index(1, 1, 0), basis_index(0, 1, 0)};

// Excitation count of each subspace basis vector (drives the
// anti-Hermitian part of the conditional Hamiltonian).
inline constexpr std::array<int, 6> kSubspaceExcitations = {1, 2, 1, 2, 1, 2};

/// Full three-spin state: 8 amplitudes in the basis above.
struct ThreeSpinState {
  Vec8 amp = Vec8::Zero();

  double norm() const { return amp.norm(); }

  static ThreeSpinState basis_state(int s1, int s2, int s3) {
    ThreeSpinState st;
    st.amp(basis_index(s1, s2, s3)) = 1.0;
    return st;
  }
};

/// State restricted to the six-dimensional single/double-excitation
/// subspace. May be sub-normalized under dissipative evolution; the
/// squared norm is then the no-decay probability.
struct SubspaceState {
  Vec6 c = Vec6::Zero();

  double norm_sq() const { return c.squaredNorm(); }

  static SubspaceState basis_state(int k) {
    SubspaceState s;
    s.c(k) = 1.0;
    return s;
  }
};

/// Injects a subspace state into the full 8-dimensional space.
ThreeSpinState embed(const SubspaceState& s);

/// Projects a full state back onto the subspace. Throws
/// LeakageOutOfSubspace if the |ggg> or |eee> amplitude exceeds 1e-10.
SubspaceState project(const ThreeSpinState& s, double leak_tol = 1e-10);

}  // namespace entangler
