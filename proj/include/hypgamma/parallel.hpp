#pragma once

#include <exception>
#include <mutex>

namespace hypgamma {

// Execution policy for the data-parallel kernels. Every kernel writes
// per-index slots and reduces in a fixed order afterwards, so both modes
// produce bit-identical results; Exec::serial is the reference path the
// tests and the benchmark compare against.
enum class Exec { serial, parallel };

template <class Body>
void parallel_for(long begin, long end, Exec exec, const Body& body) {
  if (exec == Exec::serial) {
    for (long i = begin; i < end; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = begin; i < end; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hypgamma
