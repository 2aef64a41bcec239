#include "apostol/series.hpp"

#include <cstdlib>

namespace apostol {

int default_truncation() {
    if (const char* env = std::getenv("APOSTOL_LAB_TRUNCATION")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 16;
}

}  // namespace apostol
