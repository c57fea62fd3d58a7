#pragma once

namespace paley {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace paley
