#pragma once

#include <exception>
#include <vector>

namespace floquet_ising::detail {

/// Runs fn(i) for i in [0, n); the exception from the lowest failing index is rethrown.
template <class Fn>
void parallel_for(long n, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n > 0 ? n : 0);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace floquet_ising::detail
