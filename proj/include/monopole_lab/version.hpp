#pragma once

namespace monopole_lab {

#ifdef MONOPOLE_LAB_VERSION
inline constexpr const char* kVersion = MONOPOLE_LAB_VERSION;
#else
inline constexpr const char* kVersion = "0.1.0";
#endif

}  // namespace monopole_lab
