#pragma once

// Thin OpenMP helpers.  Exceptions thrown inside a parallel region are caught
// per iteration and the first one is rethrown after the region ends.

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#if defined(QCYC_HAVE_OPENMP)
#include <omp.h>
#endif

namespace qcyc {

enum class Backend { Serial, OpenMP };

inline int max_threads() {
#if defined(QCYC_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool openmp_available() {
#if defined(QCYC_HAVE_OPENMP)
  return true;
#else
  return false;
#endif
}

template <class F>
void serial_for(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i) f(i);
}

template <class F>
void omp_for(std::size_t n, F&& f) {
#if defined(QCYC_HAVE_OPENMP)
  std::exception_ptr err;
  std::mutex mu;
  const long long N = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < N; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
#else
  serial_for(n, f);
#endif
}

template <class F>
void for_each_index(Backend b, std::size_t n, F&& f) {
  if (b == Backend::OpenMP) omp_for(n, f);
  else serial_for(n, f);
}

// out[i] = f(i) for i < n.
template <class R, class F>
std::vector<R> map_indices(Backend b, std::size_t n, F&& f) {
  std::vector<R> out(n);
  for_each_index(b, n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace qcyc
