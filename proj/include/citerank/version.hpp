#pragma once

namespace citerank {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace citerank
