#include "qk0/clifford.hpp"

#include <cstdlib>

namespace qk0 {

unsigned engine_rank_cap() {
    static const unsigned cap = [] {
        if (const char* env = std::getenv("QK0_RANK_CAP")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && v >= 1 && v <= 16) return static_cast<unsigned>(v);
        }
        return kDefaultRankCap;
    }();
    return cap;
}

} // namespace qk0
