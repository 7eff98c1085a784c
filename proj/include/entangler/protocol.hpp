#pragma once

#include <functional>
#include <vector>

#include "entangler/states.hpp"

namespace entangler {

using Vec4 = Eigen::Matrix<cdouble, 4, 1>;

/// Result of one turn-off-and-measure run. Probabilities conditioned on
/// no decay are normalized; p_success is the unconditional joint
/// probability of (no decay) and (atom 1 in |g>).
struct ProtocolOutcome {
  double turn_off_tau = 0.0;
  double p_no_decay = 1.0;
  double p_ground = 0.0;
  double p_excited = 0.0;
  double p_success = 0.0;
  // Atoms 2,3 in the order |ee>,|eg>,|ge>,|gg>, renormalized within the
  // single-excitation (Bell) sector; the |gee> component counts toward
  // p_ground but sits on the failure side of the Bell measurement.
  Vec4 post_success_state = Vec4::Zero();
  double fidelity_bell = 0.0;  // overlap^2 with (|eg>+|ge>)/sqrt2
  ThreeSpinState post_failure_state;
  double fidelity_recover = 0.0;  // overlap^2 with |egg>
};

/// Optional pure-Ising z-phase evolution between turn-off and measurement.
/// With the drive off the Ising terms only add z-phases; for symmetric J
/// these change neither the probabilities nor the Bell fidelity.
struct ProtocolOptions {
  double post_off_tau = 0.0;               // extra dimensionless time
  std::array<double, 3> j_over_laser{0.0, 0.0, 0.0};  // J12, J23, J31 over Gamma
};

/// Evolves |egg> to tau_off (dissipatively when gamma_over_laser > 0),
/// projects atom 1 onto sigma^z, and fills every outcome field.
ProtocolOutcome run_protocol(double tau_off, double gamma_over_laser,
                             const ProtocolOptions& opt = {});

struct CurvePoint {
  double tau = 0.0;
  double p_joint = 0.0;        // |(c3 + c5)/sqrt2|^2, unnormalized state
  double p_conditioned = 0.0;  // same, conditioned on no decay
};

/// Bell-projection success probability along an increasing tau grid.
std::vector<CurvePoint> success_probability_curve(
    const std::vector<double>& tau_grid, double gamma_over_laser);

/// Grid argmax of p_joint refined by golden-section search on the
/// continuous evaluator to |dtau| < 1e-6; ties break to the smallest tau.
std::pair<double, double> find_peak(
    const std::vector<CurvePoint>& curve,
    const std::function<double(double)>& evaluator);

/// Peak of the joint success probability for one decay rate.
std::pair<double, double> find_peak(const std::vector<double>& tau_grid,
                                    double gamma_over_laser);

}  // namespace entangler
