#include "hardy/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy {
namespace {

double squared_norm(const Qubit& v) { return std::norm(v[0]) + std::norm(v[1]); }

ComplexAmplitude inner(const Qubit& a, const Qubit& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

bool finite(ComplexAmplitude a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

void require_unit(const Qubit& v, const char* what) {
  if (!finite(v[0]) || !finite(v[1])) {
    throw InvalidModelError(std::string(what) + " has non-finite components");
  }
  if (std::abs(squared_norm(v) - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os << what << " is not unit-norm (|v|^2 = " << squared_norm(v) << ")";
    throw InvalidModelError(os.str());
  }
}

MeasurementBasis computational_basis() {
  // + outcome is |1>.
  return MeasurementBasis({ComplexAmplitude{0.0}, ComplexAmplitude{1.0}},
                          {ComplexAmplitude{1.0}, ComplexAmplitude{0.0}});
}

// Basis whose + vector is orthogonal to a|0> + b|1> (a, b real, a^2 + b^2 = 1):
// + = b|0> - a|1>, - = a|0> + b|1>.
MeasurementBasis orthogonal_to(double a, double b) {
  return MeasurementBasis({ComplexAmplitude{b}, ComplexAmplitude{-a}},
                          {ComplexAmplitude{a}, ComplexAmplitude{b}});
}

}  // namespace

BipartiteState::BipartiteState(const std::array<ComplexAmplitude, 4>& amplitudes)
    : amplitudes_(amplitudes) {
  double total = 0.0;
  for (const auto& a : amplitudes_) {
    if (!finite(a)) throw InvalidModelError("state has non-finite amplitude");
    total += std::norm(a);
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os << "state is not normalized (sum |a|^2 = " << total << ")";
    throw InvalidModelError(os.str());
  }
}

MeasurementBasis::MeasurementBasis(const Qubit& plus, const Qubit& minus)
    : plus_(plus), minus_(minus) {
  require_unit(plus_, "basis plus vector");
  require_unit(minus_, "basis minus vector");
  if (std::abs(inner(plus_, minus_)) > kNormTolerance) {
    throw InvalidModelError("basis vectors are not orthogonal");
  }
}

JointProbabilityTable::JointProbabilityTable(const std::array<double, 16>& entries)
    : entries_(entries) {
  for (double p : entries_) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0 + kRowSumTolerance) {
      throw InvalidModelError("probability table entry outside [0,1]");
    }
  }
  for (int l = 1; l <= 2; ++l) {
    for (int r = 1; r <= 2; ++r) {
      double sum = 0.0;
      for (Outcome lo : kOutcomes)
        for (Outcome ro : kOutcomes) sum += at(l, r, lo, ro);
      if (std::abs(sum - 1.0) > kRowSumTolerance) {
        std::ostringstream os;
        os << "probabilities for settings (L" << l << ",R" << r << ") sum to " << sum;
        throw InvalidModelError(os.str());
      }
    }
  }
}

JointProbabilityTable JointProbabilityTable::unvalidated(const std::array<double, 16>& entries) {
  for (double p : entries) {
    if (!std::isfinite(p) || p < 0.0) throw InvalidModelError("probability table entry is negative");
  }
  JointProbabilityTable table;
  table.entries_ = entries;
  return table;
}

JointProbabilityTable JointProbabilityTable::uniform() {
  std::array<double, 16> e;
  e.fill(0.25);
  return JointProbabilityTable(e);
}

double joint_probability(const BipartiteState& state, const Qubit& lv, const Qubit& rv) {
  require_unit(lv, "left measurement vector");
  require_unit(rv, "right measurement vector");
  ComplexAmplitude overlap{0.0};
  for (int l = 0; l < 2; ++l) {
    for (int r = 0; r < 2; ++r) {
      overlap += std::conj(lv[static_cast<std::size_t>(l)]) *
                 std::conj(rv[static_cast<std::size_t>(r)]) * state.amplitude(l, r);
    }
  }
  // Rounding can push a product-state overlap a hair past 1.
  return std::min(1.0, std::norm(overlap));
}

JointProbabilityTable probability_table(const BipartiteState& state,
                                        const ExperimentConfig& config) {
  std::array<double, 16> entries{};
  for (Setting ls : kLeftSettings) {
    for (Setting rs : kRightSettings) {
      for (Outcome lo : kOutcomes) {
        for (Outcome ro : kOutcomes) {
          entries[JointProbabilityTable::index(ls.index, rs.index, lo, ro)] = joint_probability(
              state, config.basis(ls).vector(lo), config.basis(rs).vector(ro));
        }
      }
    }
  }
  return JointProbabilityTable(entries);
}

HardyModel canonical_hardy_model() {
  const double a = 1.0 / std::sqrt(3.0);
  BipartiteState state({ComplexAmplitude{a}, ComplexAmplitude{a}, ComplexAmplitude{a},
                        ComplexAmplitude{0.0}});
  const double h = 1.0 / std::sqrt(2.0);
  const MeasurementBasis diagonal = orthogonal_to(h, h);
  ExperimentConfig config{{diagonal, computational_basis()}, {computational_basis(), diagonal}};
  return {state, config};
}

HardyModel hardy_family(double x) {
  if (!(x > 0.0 && x < 0.5)) {
    throw DomainError("hardy_family parameter must lie in (0, 1/2)");
  }
  const double big = std::sqrt(1.0 - 2.0 * x);
  const double small = std::sqrt(x);
  BipartiteState state({ComplexAmplitude{big}, ComplexAmplitude{small}, ComplexAmplitude{small},
                        ComplexAmplitude{0.0}});
  // Given left |0> the right qubit is (big|0> + small|1>)/sqrt(1-x), and given
  // right |0> the left qubit is the same vector; L1+ and R2+ are orthogonal to it.
  const double n = std::sqrt(1.0 - x);
  const MeasurementBasis tilted = orthogonal_to(big / n, small / n);
  ExperimentConfig config{{tilted, computational_basis()}, {computational_basis(), tilted}};
  return {state, config};
}

HardyConstraintReport verify_hardy_constraints(const JointProbabilityTable& table,
                                               double epsilon) {
  using O = Outcome;
  HardyConstraintReport report;
  report.h1_zero = table.at(2, 2, O::Minus, O::Plus);
  report.h2_zero = table.at(2, 1, O::Plus, O::Plus);
  report.h3_zero = table.at(1, 1, O::Plus, O::Minus);
  report.h4_positive = table.at(1, 2, O::Plus, O::Plus);
  report.nonvacuous = table.at(2, 2, O::Plus, O::Plus);
  if (report.h1_zero > epsilon) report.failures.emplace_back("h1_zero");
  if (report.h2_zero > epsilon) report.failures.emplace_back("h2_zero");
  if (report.h3_zero > epsilon) report.failures.emplace_back("h3_zero");
  if (!(report.h4_positive > epsilon)) report.failures.emplace_back("h4_positive");
  if (!(report.nonvacuous > epsilon)) report.failures.emplace_back("nonvacuous");
  report.satisfied = report.failures.empty();
  return report;
}

JointProbabilityTable mirror(const JointProbabilityTable& table) {
  std::array<double, 16> e{};
  for (int l = 1; l <= 2; ++l)
    for (int r = 1; r <= 2; ++r)
      for (Outcome lo : kOutcomes)
        for (Outcome ro : kOutcomes)
          e[JointProbabilityTable::index(l, r, lo, ro)] = table.at(3 - r, 3 - l, ro, lo);
  return JointProbabilityTable(e);
}

}  // namespace hardy
