#pragma once

namespace cyclewalk {

inline constexpr const char* kToolName = "cyclewalk";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cyclewalk
