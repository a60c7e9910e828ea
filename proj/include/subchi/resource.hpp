#pragma once

#include <cstddef>

namespace subchi {

// Default cap on complex sizes (vertices of a subdivision, simplices handed to
// homology). Overridden by the SUBCHI_RESOURCE_CAP environment variable.
inline constexpr std::size_t kDefaultResourceCap = 1'000'000;

std::size_t default_resource_cap();

}  // namespace subchi
