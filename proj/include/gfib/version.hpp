#pragma once

namespace gfib {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gfib
