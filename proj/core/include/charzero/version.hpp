#pragma once

namespace charzero {

inline constexpr const char* kToolName = "charzero";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace charzero
