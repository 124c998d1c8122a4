#pragma once

namespace qdp {
inline constexpr const char* kVersion = "0.1.0";
}
