#pragma once

namespace stereorig {

inline constexpr const char* kToolName = "stereorig";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace stereorig
