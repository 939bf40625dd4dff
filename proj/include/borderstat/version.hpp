#pragma once

namespace borderstat {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace borderstat
