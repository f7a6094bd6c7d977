#pragma once

namespace hilb {

inline constexpr const char* kToolName = "hilb";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace hilb
