#include "loewylab/config.hpp"

#include <cstdlib>
#include <string>

namespace loewylab {

const Limits& limits() {
    static const Limits instance = [] {
        Limits l;
        if (const char* env = std::getenv("LOEWYLAB_MAX_ORDER")) {
            try {
                const long v = std::stol(env);
                if (v > 0) {
                    l.max_group_order = static_cast<std::size_t>(v);
                    l.max_algebra_dim = static_cast<std::size_t>(v);
                }
            } catch (...) {
                // ignore malformed values, keep defaults
            }
        }
        return l;
    }();
    return instance;
}

}  // namespace loewylab
