#pragma once

namespace qpt {

inline constexpr const char* kVersion = "qpt 0.1.0";

}  // namespace qpt
