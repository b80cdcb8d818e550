// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

namespace credal {

inline constexpr const char* library_name = "credal";
inline constexpr const char* library_version = "0.1.0";

} // namespace credal
