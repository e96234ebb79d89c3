#pragma once

// Two-qubit pure states, two-outcome projective measurements and the
// Born-rule probability table of a two-setting, two-party experiment.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardy/types.hpp"

namespace hardy {

using ComplexAmplitude = std::complex<double>;
using Qubit = std::array<ComplexAmplitude, 2>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kRowSumTolerance = 1e-9;
inline constexpr double kDefaultEpsilon = 1e-9;

// Amplitudes indexed by (left bit, right bit): 00, 01, 10, 11.
class BipartiteState {
 public:
  // Throws InvalidModelError unless the squared norm is 1 within 1e-12.
  explicit BipartiteState(const std::array<ComplexAmplitude, 4>& amplitudes);

  const std::array<ComplexAmplitude, 4>& amplitudes() const { return amplitudes_; }
  ComplexAmplitude amplitude(int left_bit, int right_bit) const {
    return amplitudes_[static_cast<std::size_t>(2 * left_bit + right_bit)];
  }

 private:
  std::array<ComplexAmplitude, 4> amplitudes_;
};

class MeasurementBasis {
 public:
  // Throws InvalidModelError unless plus/minus are orthonormal within 1e-12.
  MeasurementBasis(const Qubit& plus, const Qubit& minus);

  const Qubit& plus() const { return plus_; }
  const Qubit& minus() const { return minus_; }
  const Qubit& vector(Outcome o) const { return o == Outcome::Plus ? plus_ : minus_; }

 private:
  Qubit plus_;
  Qubit minus_;
};

struct ExperimentConfig {
  // Index 0 holds setting 1, index 1 holds setting 2.
  std::array<MeasurementBasis, 2> left;
  std::array<MeasurementBasis, 2> right;

  const MeasurementBasis& basis(Setting s) const {
    const auto& side = s.region == Region::Left ? left : right;
    return side[static_cast<std::size_t>(s.index - 1)];
  }
};

// P(left outcome, right outcome | left setting, right setting) for all 16 keys.
class JointProbabilityTable {
 public:
  JointProbabilityTable() = default;
  // Validates non-negativity and per-setting-pair row sums (1e-9).
  explicit JointProbabilityTable(const std::array<double, 16>& entries);

  double at(Setting left, Setting right, Outcome lo, Outcome ro) const {
    return entries_[index(left.index, right.index, lo, ro)];
  }
  double at(int left_index, int right_index, Outcome lo, Outcome ro) const {
    return entries_[index(left_index, right_index, lo, ro)];
  }
  const std::array<double, 16>& entries() const { return entries_; }

  // Layout: ((left-1)*2 + (right-1))*4 + lo*2 + ro, with + before -.
  static std::size_t index(int left_index, int right_index, Outcome lo, Outcome ro) {
    return static_cast<std::size_t>(((left_index - 1) * 2 + (right_index - 1)) * 4 +
                                    outcome_rank(lo) * 2 + outcome_rank(ro));
  }

  static JointProbabilityTable uniform();
  // Skips the row-sum check (entries must still be finite and non-negative),
  // for partial tables where some setting pair has no recorded outcome.
  static JointProbabilityTable unvalidated(const std::array<double, 16>& entries);

 private:
  std::array<double, 16> entries_{};
};

struct HardyConstraintReport {
  double h1_zero = 0.0;       // P(L2-,R2+ | L2,R2)
  double h2_zero = 0.0;       // P(L2+,R1+ | L2,R1)
  double h3_zero = 0.0;       // P(L1+,R1- | L1,R1)
  double h4_positive = 0.0;   // P(L1+,R2+ | L1,R2)
  double nonvacuous = 0.0;    // P(L2+,R2+ | L2,R2)
  bool satisfied = false;
  std::vector<std::string> failures;  // in the order h1, h2, h3, h4, nonvacuous
};

struct HardyModel {
  BipartiteState state;
  ExperimentConfig config;
};

// |<lv (x) rv | state>|^2.
double joint_probability(const BipartiteState& state, const Qubit& lv, const Qubit& rv);

JointProbabilityTable probability_table(const BipartiteState& state,
                                        const ExperimentConfig& config);

// (|00> + |01> + |10>)/sqrt3 with L2, R1 measured in the computational basis
// (+ = |1>) and L1, R2 in the basis whose + vector is (|0> - |1>)/sqrt2.
HardyModel canonical_hardy_model();

// Amplitudes (sqrt(1-2x), sqrt x, sqrt x, 0); throws DomainError unless 0 < x < 1/2.
HardyModel hardy_family(double x);

HardyConstraintReport verify_hardy_constraints(const JointProbabilityTable& table,
                                               double epsilon = kDefaultEpsilon);

// Left/right swap with setting labels exchanged 1<->2; the canonical table is
// a fixed point.
JointProbabilityTable mirror(const JointProbabilityTable& table);

}  // namespace hardy
