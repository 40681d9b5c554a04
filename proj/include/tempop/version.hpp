#pragma once

namespace tempop {
inline constexpr const char* kVersion = "1.0.0";
}
