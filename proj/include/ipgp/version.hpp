#pragma once

namespace ipgp {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace ipgp
