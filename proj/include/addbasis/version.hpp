#pragma once

namespace addbasis {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace addbasis
