#pragma once

namespace spherical {
inline constexpr const char* version = "0.1.0";
}
