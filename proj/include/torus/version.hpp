#pragma once

namespace torus {

inline constexpr const char* kVersion = "0.1.0";

}
