#include "subchi/resource.hpp"

#include <cstdlib>
#include <string>

namespace subchi {

std::size_t default_resource_cap() {
    if (const char* env = std::getenv("SUBCHI_RESOURCE_CAP")) {
        try {
            const unsigned long long value = std::stoull(env);
            if (value > 0)
                return static_cast<std::size_t>(value);
        } catch (const std::exception&) {
        }
    }
    return kDefaultResourceCap;
}

}  // namespace subchi
