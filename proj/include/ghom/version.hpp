#pragma once

namespace ghom {

inline constexpr const char* kEngineName = "ghom";
inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace ghom
