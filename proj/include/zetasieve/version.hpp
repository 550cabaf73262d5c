#pragma once

namespace zs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zs
