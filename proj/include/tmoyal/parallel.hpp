// Execution policy for the sweep kernels. The serial path is a plain reference
// loop; the openmp path distributes iterations statically. Kernels written on
// top of parallel_for store per-index results and reduce afterwards, so both
// policies produce bitwise-identical output (asserted in the tests, timed in
// the bench tool).
#pragma once

#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tmoyal {

enum class ExecPolicy { serial, openmp };

inline ExecPolicy exec_policy_from_name(const std::string& s) {
    if (s == "serial") return ExecPolicy::serial;
    if (s == "openmp") return ExecPolicy::openmp;
    throw std::invalid_argument("unknown execution policy '" + s + "'");
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
void parallel_for(int n, ExecPolicy policy, F&& fn) {
    if (policy == ExecPolicy::serial) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) fn(i);
#else
    for (int i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace tmoyal
