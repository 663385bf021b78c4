// Timing comparison of the serial reference paths against the OpenMP
// kernels: explorer hunts, satisfiability probes, the constants grid scan
// and the quadrature panel loop. Results must match bit-for-bit; this tool
// also asserts that while timing.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "loewner/constants.hpp"
#include "loewner/explorer.hpp"
#include "loewner/json_io.hpp"

using namespace loewner;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
  std::printf("%-34s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, serial_s,
              parallel_s, serial_s / parallel_s, identical ? "identical" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both paths run serially\n");
#endif

  {
    GeneratorSpec spec;
    spec.dim = 8;
    spec.spectrum_interval = Interval(1.0, 3.0);
    spec.seed = 42;
    spec.count = 4000;
    const ScalarFunction f = ScalarFunction::power(6.0);

    auto t0 = Clock::now();
    const HuntResult serial = hunt_violations("thm1", f, spec, true, 0.5, Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const HuntResult parallel = hunt_violations("thm1", f, spec, true, 0.5, Exec::Parallel);
    const double tp = seconds_since(t0);
    report("hunt thm1 t^6 (4000 trials, d=8)", ts, tp,
           to_json(serial).dump() == to_json(parallel).dump());
  }

  {
    auto t0 = Clock::now();
    const HuntResult serial = probe_hypothesis_satisfiability("thm1", 2000000, 7, Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const HuntResult parallel =
        probe_hypothesis_satisfiability("thm1", 2000000, 7, Exec::Parallel);
    const double tp = seconds_since(t0);
    report("probe thm1 (2e6 samples)", ts, tp,
           to_json(serial).dump() == to_json(parallel).dump());
  }

  {
    const ScalarFunction f = ScalarFunction::power(-1.0);
    auto t0 = Clock::now();
    double serial = 0.0, parallel = 0.0;
    for (int rep = 0; rep < 20; ++rep)
      serial = dense_grid_extremum(1.0, 2.0, f, 1 << 21, true, Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    for (int rep = 0; rep < 20; ++rep)
      parallel = dense_grid_extremum(1.0, 2.0, f, 1 << 21, true, Exec::Parallel);
    const double tp = seconds_since(t0);
    report("grid extremum 1/t (20 x 2^21 pts)", ts, tp, serial == parallel);
  }

  {
    GeneratorSpec spec;
    spec.dim = 12;
    spec.spectrum_interval = Interval(1.0, 3.0);
    spec.seed = 9;
    spec.count = 2;
    const auto mats = random_symmetric_with_spectrum(spec);
    const ScalarFunction f = ScalarFunction::power(2.0);

    auto t0 = Clock::now();
    QuadratureResult serial, parallel;
    for (int rep = 0; rep < 40; ++rep)
      serial = hh_integral_mean_detail(f, mats[0], mats[1], 16, 8, Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    for (int rep = 0; rep < 40; ++rep)
      parallel = hh_integral_mean_detail(f, mats[0], mats[1], 16, 8, Exec::Parallel);
    const double tp = seconds_since(t0);
    report("hh quadrature (40 runs, d=12)", ts, tp,
           same_entries(serial.value, parallel.value) &&
               serial.refinement_delta == parallel.refinement_delta);
  }

  return 0;
}
