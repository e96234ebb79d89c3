#pragma once

// Maximizes P(L1+,R2+|L1,R2) over the one-parameter Hardy family: a grid over
// x in (0, 1/2) followed by golden-section refinement around the best point.
// hardy_scan runs the grid with OpenMP; hardy_scan_serial is the reference
// kernel the tests compare it against.

#include <cstddef>

namespace hardy {

struct ScanResult {
  double x_best = 0.0;
  double p_best = 0.0;
  std::size_t evaluations = 0;
};

// P(L1+,R2+|L1,R2) of hardy_family(x), computed through the probability table.
double hardy_probability(double x);

// Throws DomainError when steps < 10.
ScanResult hardy_scan(std::size_t steps);
ScanResult hardy_scan_serial(std::size_t steps);

}  // namespace hardy
