#pragma once

namespace hcrit {
inline constexpr const char* kVersion = "0.1.0";
}
