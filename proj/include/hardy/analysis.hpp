#pragma once

// The argument as runnable checks: the statement suite, the dependence of SR
// on the left-hand choice, the frame comparison and the deterministic
// local-hidden-variable contrast.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardy/semantics.hpp"

namespace hardy {

namespace catalog {

// L2 => ((R2 & R2+) -> (R1 []-> R1-))
inline constexpr const char* kStmt1 = "L2 => ((R2 & R2+) -> (R1 []-> R1-))";
// L1 => ((R2 & R2+) -> (R1 []-> R1-))
inline constexpr const char* kStmt2 = "L1 => ((R2 & R2+) -> (R1 []-> R1-))";
// (L2 & R2 & L2+) => (R1 []-> L2+)
inline constexpr const char* kStmt3 = "(L2 & R2 & L2+) => (R1 []-> L2+)";
// SR: (R2 & R2+) -> (R1 []-> R1-)
inline constexpr const char* kSR = "(R2 & R2+) -> (R1 []-> R1-)";

Formula stmt1();
Formula stmt2();
Formula stmt3();
Formula sr();
// Entails(left, SR); throws std::invalid_argument for a right-hand setting.
Formula sr_template(Setting left);

}  // namespace catalog

// Keyed by statement name: stmt1, stmt2, stmt3.
using SuiteReport = std::map<std::string, TruthReport>;

SuiteReport theorem_suite(const WorldModel& model, LocalityCondition locality);

struct FlowReport {
  bool f_of_L2 = false;
  bool f_of_L1 = false;
  bool dependent = false;
  // A counterexample world of the failing instantiation, when exactly one fails.
  std::optional<World> witness;
  std::vector<std::string> interpretation;
};

FlowReport information_flow(const WorldModel& model, LocalityCondition locality);

struct SuiteVariant {
  std::string label;  // "loc1/l-first", "loc1/r-first", "lightcone"
  LocalityCondition locality;
  FrameOrdering frame;
  SuiteReport suite;
};

struct ComparisonReport {
  std::vector<SuiteVariant> variants;
  bool stmt1_frame_dependent = false;
  // "(L1 []-> R1-)" at (L2,R1,+,-), present when that world is possible.
  std::optional<bool> probe_loc1;
  std::optional<bool> probe_lightcone;
};

inline constexpr const char* kLocalityProbe = "L1 []-> R1-";

ComparisonReport frame_comparison(const JointProbabilityTable& table,
                                  double epsilon = kDefaultEpsilon);

struct DeterministicStrategy {
  std::array<Outcome, 2> left{};   // outcome for L1, L2
  std::array<Outcome, 2> right{};  // outcome for R1, R2

  Outcome outcome(Setting s) const {
    const auto& side = s.region == Region::Left ? left : right;
    return side[static_cast<std::size_t>(s.index - 1)];
  }
};

std::string to_string(const DeterministicStrategy& s);

// All 16 strategies in a fixed order.
std::array<DeterministicStrategy, 16> all_strategies();

struct ExcludedStrategy {
  DeterministicStrategy strategy;
  std::string constraint;  // e.g. "h2_zero: P(L2+,R1+|L2,R1)=0"
};

struct FeasibilityReport {
  bool feasible = false;
  std::vector<ExcludedStrategy> excluded_strategies;
  std::vector<DeterministicStrategy> surviving_strategies;
  std::string contradiction_trace;
};

FeasibilityReport lhv_feasibility(const JointProbabilityTable& table,
                                  double epsilon = kDefaultEpsilon);

}  // namespace hardy
