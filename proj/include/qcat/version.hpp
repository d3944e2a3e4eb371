#pragma once

namespace qcat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qcat
