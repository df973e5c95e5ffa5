#include "slice/parallel.hpp"

#include <cstdlib>
#include <string>

namespace slice {

unsigned worker_count() {
    if (const char* env = std::getenv("SLICE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v > 256 ? 256 : v);
        } catch (...) {
            // fall through to hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace slice
