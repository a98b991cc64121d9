#pragma once

namespace revrank {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace revrank
