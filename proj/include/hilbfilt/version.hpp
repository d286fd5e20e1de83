#pragma once

namespace hilbfilt {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace hilbfilt
