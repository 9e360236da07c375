#pragma once
#include <cstddef>

// Execution-mode switch for the grid-scan kernels.  Every kernel computes
// per-index results into preallocated storage and reduces serially in index
// order afterwards, so serial and parallel runs produce bitwise-identical
// output; the parallel path only changes who computes each slot.

namespace gaborlab {

enum class Exec { serial, parallel };

template <class Body>
inline void for_each_index(std::size_t n, Exec exec, Body&& body) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
}

}  // namespace gaborlab
