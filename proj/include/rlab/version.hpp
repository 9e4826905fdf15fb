#pragma once

namespace rlab {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace rlab
