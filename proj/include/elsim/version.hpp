#pragma once

namespace elsim {

inline constexpr const char* kVersion = "0.1.0";

inline const char* version_string() { return "elsim 0.1.0"; }

}  // namespace elsim
