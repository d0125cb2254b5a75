#pragma once

namespace fuzzy {

inline constexpr const char* kToolName = "fuzzy-spectral";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace fuzzy
