// Times the serial and OpenMP Hardy scans on the same grid sizes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <omp.h>

#include "hardy/scan.hpp"

namespace {

template <typename F>
double time_ms(F&& f, int repeats, hardy::ScanResult& result) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) result = f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%10s %12s %12s %8s %14s\n", "steps", "serial ms", "omp ms", "speedup", "|dp|");
  for (std::size_t steps : {1000UL, 10000UL, 100000UL, 1000000UL}) {
    hardy::ScanResult serial, parallel;
    const double ts = time_ms([&] { return hardy::hardy_scan_serial(steps); }, repeats, serial);
    const double tp = time_ms([&] { return hardy::hardy_scan(steps); }, repeats, parallel);
    std::printf("%10zu %12.3f %12.3f %8.2f %14.3e\n", steps, ts, tp, ts / tp,
                serial.p_best - parallel.p_best);
  }
  return 0;
}
