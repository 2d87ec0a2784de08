// Compares the serial reference path of the sequence-trace kernel against
// the OpenMP path and checks that both produce identical digit strings.

#include <chrono>
#include <cstdio>
#include <string>

#include "hypgamma/squeeze.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hypgamma;

namespace {

double run_once(Flavor flavor, const PrecReal& r, long n, int digits, Exec exec,
                std::string& fingerprint) {
  const auto t0 = std::chrono::steady_clock::now();
  squeeze::SequenceTrace trace(flavor, r, n, default_quad_tol(digits), digits, exec);
  const auto t1 = std::chrono::steady_clock::now();
  fingerprint = trace.lower(n).to_string() + "/" + trace.upper(n).to_string();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const long n = argc > 1 ? std::atol(argv[1]) : 600;
  const int digits = argc > 2 ? std::atoi(argv[2]) : 15;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%-8s %-6s %12s %12s %8s %s\n", "flavor", "r", "serial(ms)", "openmp(ms)",
              "speedup", "identical");
  bool all_equal = true;
  for (Flavor flavor : {Flavor::rising, Flavor::power}) {
    for (long r : {1L, 3L}) {
      std::string fp_serial, fp_parallel;
      const double ms_serial =
          run_once(flavor, PrecReal(r, digits), n, digits, Exec::serial, fp_serial);
      const double ms_parallel =
          run_once(flavor, PrecReal(r, digits), n, digits, Exec::parallel, fp_parallel);
      const bool equal = fp_serial == fp_parallel;
      all_equal = all_equal && equal;
      std::printf("%-8s %-6ld %12.1f %12.1f %8.2f %s\n",
                  flavor == Flavor::rising ? "rising" : "power", r, ms_serial, ms_parallel,
                  ms_serial / ms_parallel, equal ? "yes" : "NO");
    }
  }
  return all_equal ? 0 : 1;
}
