#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ordpat {

// Execution policy for the exhaustive sweep kernels. Serial is the
// reference implementation; Parallel partitions the index range across
// OpenMP threads and merges per-thread accumulators. Merges are set
// unions followed by a canonical sort, so the merged result does not
// depend on the schedule.
enum class Exec { Serial, Parallel };

inline Exec default_exec() {
#ifdef _OPENMP
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

// Folds body(acc, i) over i in [0, n). Parallel runs keep one accumulator
// per thread and combine them with merge(result, local).
template <class MakeAcc, class Body, class Merge>
auto sweep_range(std::uint64_t n, Exec ex, MakeAcc make, Body body,
                 Merge merge) -> decltype(make()) {
  using Acc = decltype(make());
#ifdef _OPENMP
  if (ex == Exec::Parallel && n >= 2) {
    Acc result = make();
#pragma omp parallel
    {
      Acc local = make();
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        body(local, static_cast<std::uint64_t>(i));
      }
#pragma omp critical(ordpat_sweep_merge)
      merge(result, local);
    }
    return result;
  }
#else
  (void)ex;
#endif
  Acc acc = make();
  for (std::uint64_t i = 0; i < n; ++i) body(acc, i);
  return acc;
}

}  // namespace ordpat
