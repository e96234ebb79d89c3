#include "hardy/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/quantum.hpp"

namespace hardy {
namespace {

constexpr double kUpper = 0.5;
constexpr int kGoldenIterations = 100;

double grid_point(std::size_t i, std::size_t steps) {
  return kUpper * static_cast<double>(i) / static_cast<double>(steps);
}

void require_steps(std::size_t steps) {
  if (steps < 10) throw DomainError("hardy_scan needs at least 10 steps");
}

// Golden-section search on the bracket around grid index `best`.
ScanResult refine(std::size_t best, double p_grid, std::size_t steps, std::size_t evaluations) {
  const double inset = 1e-12;
  double lo = std::max(inset, grid_point(best - 1, steps));
  double hi = std::min(kUpper - inset, grid_point(best + 1, steps));
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - ratio * (hi - lo);
  double b = lo + ratio * (hi - lo);
  double pa = hardy_probability(a);
  double pb = hardy_probability(b);
  evaluations += 2;
  for (int it = 0; it < kGoldenIterations && hi - lo > 1e-15; ++it) {
    if (pa < pb) {
      lo = a;
      a = b;
      pa = pb;
      b = lo + ratio * (hi - lo);
      pb = hardy_probability(b);
    } else {
      hi = b;
      b = a;
      pb = pa;
      a = hi - ratio * (hi - lo);
      pa = hardy_probability(a);
    }
    ++evaluations;
  }
  ScanResult result{grid_point(best, steps), p_grid, evaluations};
  if (pa > result.p_best) result = {a, pa, evaluations};
  if (pb > result.p_best) result = {b, pb, evaluations};
  return result;
}

}  // namespace

double hardy_probability(double x) {
  const HardyModel model = hardy_family(x);
  return verify_hardy_constraints(probability_table(model.state, model.config)).h4_positive;
}

ScanResult hardy_scan_serial(std::size_t steps) {
  require_steps(steps);
  std::size_t best = 1;
  double p_best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < steps; ++i) {
    const double p = hardy_probability(grid_point(i, steps));
    if (p > p_best) {
      p_best = p;
      best = i;
    }
  }
  return refine(best, p_best, steps, steps - 1);
}

ScanResult hardy_scan(std::size_t steps) {
  require_steps(steps);
  const auto n = static_cast<long long>(steps);
  std::size_t best = 1;
  double p_best = -std::numeric_limits<double>::infinity();
#pragma omp parallel
  {
    std::size_t local_best = 1;
    double local_p = -std::numeric_limits<double>::infinity();
#pragma omp for schedule(static) nowait
    for (long long i = 1; i < n; ++i) {
      const double p = hardy_probability(grid_point(static_cast<std::size_t>(i), steps));
      if (p > local_p) {
        local_p = p;
        local_best = static_cast<std::size_t>(i);
      }
    }
    // Lowest index wins ties so the result matches the serial kernel.
#pragma omp critical(hardy_scan_merge)
    if (local_p > p_best || (local_p == p_best && local_best < best)) {
      p_best = local_p;
      best = local_best;
    }
  }
  return refine(best, p_best, steps, steps - 1);
}

}  // namespace hardy
