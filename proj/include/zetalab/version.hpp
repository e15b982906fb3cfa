#pragma once

namespace zetalab {

inline constexpr const char* TOOL_NAME = "zetalab";
inline constexpr const char* TOOL_VERSION = "0.1.0";

} // namespace zetalab
