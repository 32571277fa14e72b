#pragma once

namespace qder {

inline constexpr const char* kToolName = "qderange";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qder
