#pragma once

namespace tndg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tndg
