#pragma once

namespace bubblepat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bubblepat
