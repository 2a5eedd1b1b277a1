#pragma once

namespace curv4 {

inline constexpr const char* kVersion = "0.1.0";

} // namespace curv4
