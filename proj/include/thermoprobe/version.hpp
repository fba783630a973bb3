#pragma once

namespace thermoprobe {

inline constexpr const char* kToolName = "thermoprobe";
inline constexpr const char* kToolVersion = "0.1.0";

// Bumped whenever CSV column order or JSON field names change.
inline constexpr int kOutputFormatVersion = 1;

}  // namespace thermoprobe
