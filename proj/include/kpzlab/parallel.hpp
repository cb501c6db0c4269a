#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kpzlab {

enum class ExecMode { Serial, Parallel };

// Replica loop: fn(i) must be a pure function of i writing only to slot i of
// some preallocated output, so serial and parallel runs are bit-identical.
template <class F>
void replica_map(std::size_t m, F&& fn, ExecMode mode = ExecMode::Parallel) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
    const long long n = static_cast<long long>(m);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < m; ++i) fn(i);
}

}  // namespace kpzlab
