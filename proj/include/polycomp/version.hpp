#pragma once

namespace polycomp {

inline constexpr const char* kVersion = "0.1.0";

}
