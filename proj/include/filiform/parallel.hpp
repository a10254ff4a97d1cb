#pragma once

#include <cstddef>
#include <exception>

namespace filiform {

// Selects the OpenMP kernel or the serial reference loop. Both visit the
// same index set and write disjoint slots, so results are identical.
enum class Exec { kSerial, kParallel };

// Calls body(i) for i in [0, count). Exceptions thrown by body are captured
// and the first one (lowest index) is rethrown after the loop.
template <class Body>
void ForEachIndex(std::size_t count, Exec exec, Body&& body) {
  std::exception_ptr first_error;
  std::size_t first_index = count;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::kParallel && count > 1)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(filiform_for_each_error)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace filiform
