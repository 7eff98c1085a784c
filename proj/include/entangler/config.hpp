#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "entangler/model.hpp"

namespace entangler {

enum class Emit { kCouplings, kEvolution, kEntanglement, kProtocol, kFig2, kFig3 };

/// Fully validated run configuration. See README for the config grammar
/// (key = value lines, [physical] / [thresholds] sections, # comments;
/// unknown keys are errors).
struct RunConfig {
  PhysicalParams physical;
  RegimeThresholds thresholds;

  double tau_max = 6.283185307179586;  // 2*pi
  int tau_points = 2001;
  double tau_off = 3.141592653589793;  // protocol turn-off time
  std::vector<double> gamma_list{0.0, 0.001, 0.002, 0.01};  // gamma / Gamma
  std::string output_path = ".";
  std::set<Emit> emit{Emit::kFig2, Emit::kFig3};

  std::uint64_t config_hash = 0;  // FNV-1a of the raw config text

  /// Uniform tau grid [0, tau_max] with tau_points entries.
  std::vector<double> tau_grid() const;
};

/// Parses and validates config text. Throws ParseError (with line and
/// column) on malformed input and ValidationError naming the offending
/// key on out-of-range values or unknown keys.
RunConfig parse_config(const std::string& text);

/// FNV-1a 64-bit, used to stamp CSV outputs with the config identity.
std::uint64_t fnv1a64(const std::string& text);

const char* emit_name(Emit e);

}  // namespace entangler
