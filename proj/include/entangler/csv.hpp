#pragma once

#include <cstdint>
#include <string>

namespace entangler {

inline constexpr const char* kToolVersion = "0.1.0";

/// Fixed 12-significant-digit formatting; all CSV output goes through
/// this so golden files are byte-identical across runs.
std::string format_number(double v);

/// Comment line recording tool version and config hash, placed at the
/// top of every CSV.
std::string csv_stamp(std::uint64_t config_hash);

}  // namespace entangler
