#pragma once

namespace pdmplab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pdmplab
