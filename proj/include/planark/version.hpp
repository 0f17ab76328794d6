#pragma once

namespace planark {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace planark
