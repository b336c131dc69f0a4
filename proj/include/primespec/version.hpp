#pragma once

namespace primespec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace primespec
