#pragma once

#include <string_view>

namespace mirkit {

inline constexpr std::string_view kToolName = "mirkit";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace mirkit
