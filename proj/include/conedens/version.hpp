#pragma once

#include <string_view>

namespace conedens {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace conedens
