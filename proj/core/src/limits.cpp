#include "happy/limits.hpp"

#include <cstdlib>
#include <string>

namespace happy {

Limits Limits::from_env() {
    Limits limits;
    if (const char* raw = std::getenv("HAPPY_MAX_SUBSETS"); raw != nullptr && *raw != '\0') {
        try {
            auto cap = std::stoull(raw);
            limits.max_colorings = cap;
            limits.max_subsets = cap;
        } catch (const std::exception&) {
            // unparsable values keep the defaults
        }
    }
    return limits;
}

}  // namespace happy
