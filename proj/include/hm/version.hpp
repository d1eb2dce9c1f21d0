#pragma once

namespace hm {

inline constexpr const char* kVersion = "hm 0.1.0";

}  // namespace hm
