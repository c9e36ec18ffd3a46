#pragma once

#include <cstddef>
#include <functional>

#ifdef KLSW_HAVE_OPENMP
#include <omp.h>
#endif

namespace klsw {

/// Global worker count for the OpenMP kernels; 1 selects the serial
/// reference path (the exact same loop body, no OpenMP region), 0 lets the
/// runtime pick.
inline int& parallel_jobs_ref() {
    static int jobs = 0;
    return jobs;
}
inline int parallel_jobs() { return parallel_jobs_ref(); }
inline void set_parallel_jobs(int jobs) { parallel_jobs_ref() = jobs; }

/// Runs fn(i) for i in [0, n). Independent iterations only; results must not
/// depend on execution order.
template <typename F>
void parallel_for(size_t n, F&& fn) {
#ifdef KLSW_HAVE_OPENMP
    if (parallel_jobs() != 1) {
        int jobs = parallel_jobs();
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
        for (long long i = 0; i < (long long)n; ++i) fn((size_t)i);
        return;
    }
#endif
    for (size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace klsw
