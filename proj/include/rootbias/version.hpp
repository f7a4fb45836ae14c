#pragma once

namespace rootbias {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rootbias
