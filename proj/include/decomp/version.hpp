#pragma once

namespace decomp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace decomp
