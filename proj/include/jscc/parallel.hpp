#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jscc {

enum class ExecPolicy { Serial, Parallel };

// Runs f(i) for every i in [0, n). Each index is computed independently, so
// the Parallel policy changes only scheduling, never the result; tests hold
// both policies to bitwise-equal outputs.
template <class F>
void parallel_for(std::size_t n, ExecPolicy policy, F&& f) {
  if (policy == ExecPolicy::Parallel && n > 1) {
    std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t i = 0; i < n; ++i) f(i);
  }
}

}  // namespace jscc
