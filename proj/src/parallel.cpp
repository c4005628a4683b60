#include "orthantgeo/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace og {

int worker_count() {
    static const int cached = [] {
#ifdef _OPENMP
        int n = omp_get_max_threads();
#else
        int n = 1;
#endif
        if (const char* env = std::getenv("ORTHANTGEO_THREADS")) {
            try {
                const int cap = std::stoi(env);
                if (cap >= 1 && cap < n) n = cap;
            } catch (...) {
                // ignore unparsable values
            }
        }
        return n;
    }();
    return cached;
}

}  // namespace og
