#pragma once

#include <cstddef>

namespace relmat {

/// Default cap for per-structure exhaustive scans (2^n subsets).
inline constexpr std::size_t kMaxExhaustive = 16;

/// Cap for enumerating all relations / all independence families on a
/// universe (2^(n*n) relations, 2^(2^n) candidate families).
inline constexpr std::size_t kMaxEnumeration = 4;

}  // namespace relmat
