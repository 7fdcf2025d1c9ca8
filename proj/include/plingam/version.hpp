#pragma once

namespace plingam {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace plingam
