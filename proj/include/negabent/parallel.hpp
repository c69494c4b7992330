#pragma once

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace negabent {

enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

/// fn(i) for i in [begin, end). Iterations must be independent.
template <typename Fn>
void for_range(std::int64_t begin, std::int64_t end, Fn&& fn, Exec exec = Exec::parallel) {
  if (exec == Exec::serial) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = begin; i < end; ++i) fn(i);
}

/// True iff pred(i) holds for every i; stops issuing new work after the first failure.
template <typename Pred>
bool all_of_range(std::int64_t begin, std::int64_t end, Pred&& pred, Exec exec = Exec::parallel) {
  if (exec == Exec::serial) {
    for (std::int64_t i = begin; i < end; ++i)
      if (!pred(i)) return false;
    return true;
  }
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = begin; i < end; ++i) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    if (!pred(i)) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

}  // namespace negabent
