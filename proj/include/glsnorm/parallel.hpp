#pragma once

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace glsnorm::par {

/// Process toggle for the OpenMP kernels. Results are bitwise identical
/// either way: every parallel loop writes to its own slot and reductions
/// run serially over the filled array afterwards.
inline bool& parallel_enabled() {
    static bool enabled = true;
    return enabled;
}

/// Serial reference kernel: fn(i) for i in [0, n).
template <class Fn>
void for_index_serial(std::size_t n, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// OpenMP kernel. fn(i) must write only to state owned by index i.
template <class Fn>
void for_index(std::size_t n, Fn&& fn) {
#if defined(_OPENMP)
    if (parallel_enabled() && n >= 16) {
        #pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for_index_serial(n, fn);
}

/// out[i] = fn(xs[i]); parallel fill, serial consumers.
template <class Fn>
std::vector<double> map_grid(const std::vector<double>& xs, Fn&& fn) {
    std::vector<double> out(xs.size());
    for_index(xs.size(), [&](std::size_t i) { out[i] = fn(xs[i]); });
    return out;
}

template <class Fn>
std::vector<double> map_grid_serial(const std::vector<double>& xs, Fn&& fn) {
    std::vector<double> out(xs.size());
    for_index_serial(xs.size(), [&](std::size_t i) { out[i] = fn(xs[i]); });
    return out;
}

/// Index of the smallest element, lowest index on ties. Serial scan so the
/// answer does not depend on thread scheduling.
inline std::size_t argmin(const std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[best]) best = i;
    return best;
}

inline std::size_t argmax(const std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

}  // namespace glsnorm::par
